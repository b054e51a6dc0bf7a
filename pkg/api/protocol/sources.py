"""Agent sources: where each round's agent comes from."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

import numpy as np

from ..exceptions import ProtocolError
from ..feedback import FeedbackSetting
from ..graphs import ManipulationGraph, VertexId
from ..hypotheses import Agent, FiniteDistribution, Hypothesis


@dataclass(frozen=True, slots=True)
class SourceMove:
    """The round's agent and the true graph it best-responds on."""

    agent: Agent
    graph: ManipulationGraph


class AgentSource(Protocol):
    name: str
    realizable: bool
    supported_settings: frozenset[FeedbackSetting]

    def disclose(self, t: int) -> VertexId:
        """Commit to x_t before h_t is chosen."""
        ...

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        """Agent for round t given the implemented h_t (x is the disclosed x_t)."""
        ...

    def final_graph(self) -> ManipulationGraph: ...

    def final_target(self) -> Hypothesis | None: ...


class IIDSource:
    """Agents drawn i.i.d. from a finite-support distribution."""

    name = "iid"
    supported_settings = frozenset(FeedbackSetting)

    def __init__(
        self,
        dist: FiniteDistribution,
        graph: ManipulationGraph,
        seed: int,
        target: Hypothesis | None = None,
    ) -> None:
        self.dist = dist
        self.graph = graph
        self.target = target
        self.realizable = target is not None
        self._rng = np.random.default_rng(seed)
        self._drawn: Agent | None = None

    def _draw(self) -> Agent:
        return self.dist.sample(self._rng, 1)[0]

    def disclose(self, t: int) -> VertexId:
        self._drawn = self._draw()
        return self._drawn.x

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        if x is None:
            agent = self._draw()
        else:
            if self._drawn is None or self._drawn.x != x:
                raise ProtocolError(f"Round {t}: respond without matching disclose")
            agent = self._drawn
        self._drawn = None
        return SourceMove(agent, self.graph)

    def final_graph(self) -> ManipulationGraph:
        return self.graph

    def final_target(self) -> Hypothesis | None:
        return self.target
