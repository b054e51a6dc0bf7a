"""Manipulation graphs over a finite, indexed vertex set."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Self

from .exceptions import ValidationError

type VertexId = int
type Arc = tuple[VertexId, VertexId]


def check_vertex(x: VertexId, n: int) -> None:
    """Raise ValidationError unless x indexes a universe of size n."""
    if not 0 <= x < n:
        raise ValidationError(f"Vertex {x} is outside the universe [0, {n})")


@dataclass(frozen=True, slots=True)
class ManipulationGraph:
    """Directed graph with bounded out-degree; arc (x, x') lets x move to x'.

    Self-loops are never stored. The closed neighborhood N[x] is computed.
    """

    n: int
    adjacency: tuple[tuple[VertexId, ...], ...]
    declared_k: int
    _neighbor_sets: tuple[frozenset[VertexId], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError("Universe must contain at least one vertex")
        if len(self.adjacency) != self.n:
            raise ValidationError(
                f"Adjacency has {len(self.adjacency)} rows for universe {self.n}"
            )
        if self.declared_k < 0:
            raise ValidationError("Degree bound k must be non-negative")
        for x, row in enumerate(self.adjacency):
            if len(row) > self.declared_k:
                raise ValidationError(
                    f"Vertex {x} has out-degree {len(row)} > k={self.declared_k}"
                )
            if len(set(row)) != len(row):
                raise ValidationError(f"Vertex {x} lists a neighbor twice")
            for y in row:
                check_vertex(y, self.n)
                if y == x:
                    raise ValidationError(f"Self-loop at vertex {x}")
        object.__setattr__(
            self, "_neighbor_sets", tuple(frozenset(row) for row in self.adjacency)
        )

    @classmethod
    def from_arcs(
        cls, n: int, arcs: Iterable[Arc], declared_k: int | None = None
    ) -> Self:
        rows: list[list[VertexId]] = [[] for _ in range(n)]
        for x, y in arcs:
            check_vertex(x, n)
            rows[x].append(y)
        adjacency = tuple(tuple(sorted(row)) for row in rows)
        k = max((len(row) for row in adjacency), default=0)
        return cls(n, adjacency, k if declared_k is None else declared_k)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Iterable[VertexId]], declared_k: int | None = None
    ) -> Self:
        return cls.from_arcs(
            len(rows),
            ((x, y) for x, row in enumerate(rows) for y in row),
            declared_k,
        )

    @classmethod
    def empty(cls, n: int, declared_k: int = 0) -> Self:
        """Graph with no arcs; strategic and standard learning coincide on it."""
        return cls(n, tuple(() for _ in range(n)), declared_k)

    def neighbors(self, x: VertexId) -> tuple[VertexId, ...]:
        """Open out-neighborhood N(x), ascending."""
        return self.adjacency[x]

    def neighbor_set(self, x: VertexId) -> frozenset[VertexId]:
        return self._neighbor_sets[x]

    def closed_neighbors(self, x: VertexId) -> tuple[VertexId, ...]:
        """Closed neighborhood N[x] = {x} ∪ N(x), ascending."""
        return tuple(sorted((x, *self.adjacency[x])))

    def has_arc(self, x: VertexId, y: VertexId) -> bool:
        return y in self._neighbor_sets[x]

    def out_degree(self, x: VertexId) -> int:
        return len(self.adjacency[x])

    @property
    def max_out_degree(self) -> int:
        return max((len(row) for row in self.adjacency), default=0)

    @property
    def arc_count(self) -> int:
        return sum(len(row) for row in self.adjacency)

    def arcs(self) -> Iterator[Arc]:
        for x, row in enumerate(self.adjacency):
            for y in row:
                yield x, y

    def is_subgraph_of(self, other: ManipulationGraph) -> bool:
        """Every arc of this graph is also an arc of other."""
        if other.n != self.n:
            return False
        return all(
            self._neighbor_sets[x] <= other.neighbor_set(x) for x in range(self.n)
        )

    def with_arcs(self, arcs: Iterable[Arc], declared_k: int | None = None) -> Self:
        merged = {*self.arcs(), *arcs}
        return type(self).from_arcs(
            self.n, sorted(merged), declared_k or self.declared_k
        )


@dataclass(frozen=True, slots=True)
class GraphClass:
    """Finite, explicitly materialized class of candidate graphs."""

    members: tuple[ManipulationGraph, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValidationError("Graph class must not be empty")
        first = self.members[0]
        for graph in self.members[1:]:
            if graph.n != first.n or graph.declared_k != first.declared_k:
                raise ValidationError(
                    "Graph class members must share universe size and k"
                )

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ManipulationGraph]:
        return iter(self.members)

    def __getitem__(self, index: int) -> ManipulationGraph:
        return self.members[index]

    def __contains__(self, graph: object) -> bool:
        return graph in self.members

    @property
    def n(self) -> int:
        return self.members[0].n

    @property
    def declared_k(self) -> int:
        return self.members[0].declared_k

    def index_of(self, graph: ManipulationGraph) -> int:
        return self.members.index(graph)

    def materialize(self) -> GraphClass:
        return self
