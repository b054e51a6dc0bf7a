"""Observation records and learner outputs for the batch learners."""

from __future__ import annotations

from dataclasses import dataclass

from ..constructions.models import AnyGraphClass
from ..exceptions import ValidationError
from ..graphs import ManipulationGraph, VertexId
from ..hypotheses import Agent, Hypothesis, HypothesisClass


@dataclass(frozen=True, slots=True)
class LabeledObservation:
    """One probe round: original feature x, observed feature v, label y.

    v = x means the agent did not move, which under the all-but-x probe
    happens only when x has no out-neighbors.
    """

    x: VertexId
    v: VertexId
    y: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.v < 0:
            raise ValidationError("Observation vertices must be non-negative")
        if self.y not in (0, 1):
            raise ValidationError(f"Observation label must be 0 or 1, got {self.y!r}")

    @property
    def agent(self) -> Agent:
        return Agent(self.x, self.y)

    @property
    def moved(self) -> bool:
        return self.v != self.x


@dataclass(frozen=True, slots=True)
class GraphHypothesisPair:
    graph_index: int
    hypothesis_index: int
    empirical_degree: int = 0
    """Σ_t |N_G(x_t)| of the chosen graph over the fitting sample."""

    def resolve(
        self, graph_class: AnyGraphClass, cls: HypothesisClass
    ) -> tuple[ManipulationGraph, Hypothesis]:
        return graph_class[self.graph_index], cls[self.hypothesis_index]


@dataclass(frozen=True, slots=True)
class ClickObservation:
    """A recommendation round: user x, recommended items, the clicked item if any."""

    x: VertexId
    recommended: frozenset[VertexId]
    clicked: VertexId | None = None

    def __post_init__(self) -> None:
        if self.clicked is not None and self.clicked not in self.recommended:
            raise ValidationError(
                f"Clicked item {self.clicked} was not among the recommendations"
            )
        if self.x in self.recommended:
            raise ValidationError("A user is never recommended to themselves")
