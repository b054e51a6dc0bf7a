"""Fixture container and lazily enumerated graph classes."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

import config

from ..exceptions import ResourceBudgetError, ValidationError
from ..graphs import GraphClass, ManipulationGraph, VertexId
from ..hypotheses import HypothesisClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ColumnChoiceGraphClass:
    """Graphs where each source vertex keeps at most one of its candidate arcs.

    Column j contributes the choice c_j ∈ {0, 1, ..., len(candidates[j])}:
    0 means no arc, c means the arc sources[j] → candidates[j][c-1]. Graphs
    are indexed in mixed radix with column 0 least significant, so the class
    behaves like a sequence without being stored.
    """

    n: int
    sources: tuple[VertexId, ...]
    candidates: tuple[tuple[VertexId, ...], ...]
    declared_k: int = 1
    _source_column: dict[VertexId, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(self.sources) != len(self.candidates):
            raise ValidationError("Each source needs its own candidate list")
        object.__setattr__(
            self,
            "_source_column",
            {source: j for j, source in enumerate(self.sources)},
        )

    def __len__(self) -> int:
        return math.prod(len(c) + 1 for c in self.candidates)

    def graph_for(self, choices: Sequence[int]) -> ManipulationGraph:
        arcs = [
            (self.sources[j], self.candidates[j][c - 1])
            for j, c in enumerate(choices)
            if c
        ]
        return ManipulationGraph.from_arcs(self.n, arcs, self.declared_k)

    def choices_of(self, graph: ManipulationGraph) -> tuple[int, ...] | None:
        """Inverse of graph_for, or None when the graph is not a member."""
        if graph.n != self.n or graph.declared_k != self.declared_k:
            return None
        choices: list[int] = []
        for j, source in enumerate(self.sources):
            row = graph.neighbors(source)
            if not row:
                choices.append(0)
            elif len(row) == 1 and row[0] in self.candidates[j]:
                choices.append(self.candidates[j].index(row[0]) + 1)
            else:
                return None
        arcs_outside = sum(
            graph.out_degree(x)
            for x in range(self.n)
            if x not in self._source_column
        )
        return None if arcs_outside else tuple(choices)

    def __contains__(self, graph: object) -> bool:
        return (
            isinstance(graph, ManipulationGraph)
            and self.choices_of(graph) is not None
        )

    def __getitem__(self, index: int) -> ManipulationGraph:
        if not 0 <= index < len(self):
            raise IndexError(index)
        choices: list[int] = []
        for column in self.candidates:
            index, c = divmod(index, len(column) + 1)
            choices.append(c)
        return self.graph_for(choices)

    def __iter__(self) -> Iterator[ManipulationGraph]:
        for index in range(len(self)):
            yield self[index]

    def index_of(self, graph: ManipulationGraph) -> int:
        choices = self.choices_of(graph)
        if choices is None:
            raise ValueError("Graph is not a member of this class")
        index = 0
        for c, column in zip(reversed(choices), reversed(self.candidates), strict=True):
            index = index * (len(column) + 1) + c
        return index

    def sample(self, rng: np.random.Generator) -> ManipulationGraph:
        return self.graph_for(
            [int(rng.integers(len(column) + 1)) for column in self.candidates]
        )

    def count_consistent(self, arcs: Iterable[tuple[VertexId, VertexId]]) -> int:
        """Members containing every observed arc (x, v) with v ≠ x."""
        forced: dict[int, VertexId] = {}
        for x, v in arcs:
            if x == v:
                continue
            column = self._source_column.get(x)
            if column is None or v not in self.candidates[column]:
                return 0
            if forced.setdefault(column, v) != v:
                return 0
        return math.prod(
            1 if j in forced else len(column) + 1
            for j, column in enumerate(self.candidates)
        )

    def materialize(self) -> GraphClass:
        if len(self.sources) > config.MATERIALIZE_LIMIT:
            raise ResourceBudgetError(
                f"Refusing to enumerate {len(self)} graphs "
                f"({len(self.sources)} columns > {config.MATERIALIZE_LIMIT})",
                reached=len(self.sources),
            )
        logger.debug("Materializing %d graphs", len(self))
        return GraphClass(tuple(self))


type AnyGraphClass = GraphClass | ColumnChoiceGraphClass


@dataclass(frozen=True)
class Fixture:
    """A named construction: graph (or graph class), class, and targets."""

    name: str
    cls: HypothesisClass
    vertex_names: tuple[str, ...]
    graph: ManipulationGraph | None = None
    graph_class: AnyGraphClass | None = None
    target: int | None = None
    target_graph: int | None = None
    params: Mapping[str, int] = field(default_factory=dict[str, int])

    def __post_init__(self) -> None:
        if self.graph is not None:
            n = self.graph.n
        elif self.graph_class is not None:
            n = self.graph_class.n
        else:
            raise ValidationError("Fixture needs a graph or a graph class")
        if self.cls.n != n or len(self.vertex_names) != n:
            raise ValidationError(
                f"Fixture {self.name!r}: universe sizes disagree "
                f"(graph {n}, class {self.cls.n}, names {len(self.vertex_names)})"
            )
        if self.target is not None and not 0 <= self.target < len(self.cls):
            raise ValidationError(f"Target index {self.target} out of range")
        if self.target_graph is not None:
            if self.graph_class is None or not (
                0 <= self.target_graph < len(self.graph_class)
            ):
                raise ValidationError(
                    f"Target graph index {self.target_graph} out of range"
                )

    @property
    def n(self) -> int:
        return self.cls.n

    @property
    def star_graph(self) -> ManipulationGraph:
        """The true graph: the fixed graph, or the class member at target_graph."""
        if self.graph is not None:
            return self.graph
        if self.graph_class is None or self.target_graph is None:
            raise ValidationError(f"Fixture {self.name!r} has no designated graph")
        return self.graph_class[self.target_graph]

    @property
    def degree_bound(self) -> int:
        if self.graph_class is not None:
            return self.graph_class.declared_k
        return self.star_graph.declared_k

    def name_of(self, x: VertexId) -> str:
        return self.vertex_names[x]
