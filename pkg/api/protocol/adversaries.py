"""Adaptive adversaries that force mistakes on deterministic learners.

Each adversary sees the implemented h_t before choosing the agent (or, when
x_t must be disclosed first, before choosing the label and any arcs it still
controls). Realizable adversaries keep a set of surviving targets and only
commit to one at the end; arcs whose endpoint depends on that choice are
placed lazily, and the engine replays the final target over the transcript.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np

from ..constructions.lower_bounds import binary_rep_hubs
from ..constructions.models import ColumnChoiceGraphClass, Fixture
from ..exceptions import ValidationError
from ..feedback import FeedbackSetting
from ..graphs import GraphClass, ManipulationGraph, VertexId
from ..hypotheses import Agent, Hypothesis
from ..strategic import induced_label
from .sources import AgentSource, SourceMove

logger = logging.getLogger(__name__)

_KNOWN_GRAPH = frozenset(
    {FeedbackSetting.FULLY_INFORMATIVE, FeedbackSetting.PMF_X, FeedbackSetting.PMF_V}
)


def _require_fixture(fixture: Fixture, name: str, adversary: str) -> None:
    if fixture.name != name:
        raise ValidationError(
            f"Adversary {adversary!r} needs the {name!r} fixture, got {fixture.name!r}"
        )


class BinaryRepAdversary:
    """Queries every hub once and labels it against the learner.

    The hub's label is the opposite of the learner's induced label there; any
    bit pattern is realized by some code, so d·log2(k) mistakes are forced.
    Later rounds cycle through the hubs with truthful labels.
    """

    name = "fi-binrep"
    realizable = True
    supported_settings = _KNOWN_GRAPH

    def __init__(self, fixture: Fixture) -> None:
        _require_fixture(fixture, "binrep", self.name)
        self.graph = fixture.star_graph
        self.d = fixture.params["d"]
        self.k = fixture.params["k"]
        self.bits = int(math.log2(self.k))
        self.hubs = binary_rep_hubs(self.d, self.k)
        self.assigned: dict[int, int] = {}

    def _hub(self, t: int) -> VertexId:
        return self.hubs[(t - 1) % len(self.hubs)]

    def disclose(self, t: int) -> VertexId:
        return self._hub(t)

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        hub = self._hub(t) if x is None else x
        block = hub // (self.k + 1)
        if block in self.assigned:
            y = self.assigned[block]
        else:
            y = 1 - induced_label(self.graph, h, hub)
            self.assigned[block] = y
        return SourceMove(Agent(hub, y), self.graph)

    def final_graph(self) -> ManipulationGraph:
        return self.graph

    def final_target(self) -> Hypothesis:
        width = self.k + 1
        positives: list[VertexId] = []
        for c in range(self.d):
            code = sum(
                self.assigned.get(c * self.bits + i, 0) << i for i in range(self.bits)
            )
            j = code + 1
            positives.extend(
                (c * self.bits + i) * width + j
                for i in range(self.bits)
                if (code >> i) & 1
            )
        return Hypothesis.from_positive(self.graph.n, positives)


class StarAdversary:
    """Eliminates one candidate leaf per mistake, star by star.

    All-negative on the focused star: the hub agent with label 1. A positive
    leaf: that leaf with label 0, eliminating it when it still survives. Hub
    positive and every leaf negative, which no class member does: the
    smallest surviving leaf with label 1, committing the star to it. That costs
    one mistake instead of the k-1 the other answers force, so the d(k-1)
    floor holds only against learners that keep hubs negative.
    """

    name = "pmf-star"
    realizable = True
    supported_settings = frozenset({FeedbackSetting.PMF_X, FeedbackSetting.PMF_V})

    def __init__(self, fixture: Fixture) -> None:
        _require_fixture(fixture, "star", self.name)
        self.graph = fixture.star_graph
        self.d = fixture.params["d"]
        self.k = fixture.params["k"]
        self.survivors = [set(range(1, self.k + 1)) for _ in range(self.d)]

    def disclose(self, t: int) -> VertexId:
        raise ValidationError(f"{self.name} must see h_t before choosing x_t")

    def _focus(self) -> int | None:
        return next((c for c, s in enumerate(self.survivors) if len(s) > 1), None)

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        width = self.k + 1
        c = self._focus()
        if c is None:
            return SourceMove(Agent(((t - 1) % self.d) * width, 1), self.graph)
        hub = c * width
        survivors = self.survivors[c]
        positive = [j for j in range(1, width) if h(hub + j)]
        if not h(hub) and not positive:
            return SourceMove(Agent(hub, 1), self.graph)
        alive = [j for j in positive if j in survivors]
        dead = [j for j in positive if j not in survivors]
        if alive:
            survivors.discard(alive[0])
            logger.debug("pmf-star: star %d drops leaf %d", c, alive[0])
            return SourceMove(Agent(hub + alive[0], 0), self.graph)
        if dead:
            return SourceMove(Agent(hub + dead[0], 0), self.graph)
        leaf = min(survivors)
        survivors.intersection_update({leaf})
        logger.debug("pmf-star: star %d commits to leaf %d", c, leaf)
        return SourceMove(Agent(hub + leaf, 1), self.graph)

    def final_graph(self) -> ManipulationGraph:
        return self.graph

    def final_target(self) -> Hypothesis:
        width = self.k + 1
        return Hypothesis.from_positive(
            self.graph.n, (c * width + min(s) for c, s in enumerate(self.survivors))
        )


class ColumnAdversary:
    """Always queries x_{0t} of a fresh column and decides its arc afterwards.

    h_t(x_{0t}) = 1: no arc, label 0. The column all negative: an arc to the
    eventual target block, label 1. Otherwise an arc to a positive x_{it}
    outside the target, label 0, eliminating block i while two or more blocks
    survive.
    """

    name = "ug-online-lb"
    realizable = True
    supported_settings = frozenset(
        {FeedbackSetting.UG_X_THEN_V, FeedbackSetting.UG_PAIR_AFTER}
    )

    def __init__(self, fixture: Fixture) -> None:
        _require_fixture(fixture, "ug-online-lb", self.name)
        if not isinstance(fixture.graph_class, ColumnChoiceGraphClass):
            raise ValidationError("ug-online-lb needs a column-choice graph class")
        self.graphs = fixture.graph_class
        self.cls = fixture.cls
        self.n = fixture.params["n"]
        self.survivors = set(range(1, self.n + 1))
        self.choices: list[int | None] = [0] * self.n
        """Per column: 0 no arc, i an arc to block i, None the target block."""

    def _vertex(self, i: int, column: int) -> VertexId:
        return i * self.n + (column - 1)

    def _column(self, t: int) -> int:
        return (t - 1) % self.n + 1

    def disclose(self, t: int) -> VertexId:
        return self._vertex(0, self._column(t))

    def _current_graph(self) -> ManipulationGraph:
        star = min(self.survivors)
        return self.graphs.graph_for([star if c is None else c for c in self.choices])

    def _choose(self, column: int, h: Hypothesis) -> tuple[int | None, int]:
        if h(self._vertex(0, column)):
            return 0, 0
        positive = [i for i in range(1, self.n + 1) if h(self._vertex(i, column))]
        if not positive:
            return None, 1
        if len(self.survivors) > 1:
            alive = [i for i in positive if i in self.survivors]
            if alive:
                self.survivors.discard(alive[0])
                return alive[0], 0
        dead = [i for i in positive if i not in self.survivors]
        if dead:
            return dead[0], 0
        return min(self.survivors), 1

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        column = self._column(t)
        x0 = self._vertex(0, column)
        if t <= self.n:
            choice, y = self._choose(column, h)
            self.choices[column - 1] = choice
            return SourceMove(Agent(x0, y), self._current_graph())
        graph = self.final_graph()
        return SourceMove(Agent(x0, induced_label(graph, self.final_target(), x0)), graph)

    def final_graph(self) -> ManipulationGraph:
        return self._current_graph()

    def final_target(self) -> Hypothesis:
        return self.cls[min(self.survivors) - 1]


class ChainAdversary:
    """Chain fixture under pair-after feedback.

    All-negative: agent (B, 1). A or B positive: agent (A, 0). A positive C_i
    outside the target: agent (C_i, 0), eliminating i while two or more
    survive. Only the final target positive: agent (B, 1), answered truthfully.
    """

    name = "ug-chain"
    realizable = True
    supported_settings = frozenset({FeedbackSetting.UG_PAIR_AFTER})

    def __init__(self, fixture: Fixture) -> None:
        _require_fixture(fixture, "chain", self.name)
        if not isinstance(fixture.graph_class, GraphClass):
            raise ValidationError("ug-chain needs an explicit graph class")
        self.graphs = fixture.graph_class
        self.cls = fixture.cls
        self.n = fixture.params["n"]
        self.survivors = set(range(1, self.n + 1))

    def disclose(self, t: int) -> VertexId:
        raise ValidationError(f"{self.name} must see h_t before choosing x_t")

    def _agent(self, h: Hypothesis) -> Agent:
        a, b = 0, 1
        if not h.positive_set:
            return Agent(b, 1)
        if h(a) or h(b):
            return Agent(a, 0)
        positive = [i for i in range(1, self.n + 1) if h(1 + i)]
        if len(self.survivors) > 1:
            alive = [i for i in positive if i in self.survivors]
            if alive:
                self.survivors.discard(alive[0])
                return Agent(1 + alive[0], 0)
        dead = [i for i in positive if i not in self.survivors]
        if dead:
            return Agent(1 + dead[0], 0)
        return Agent(b, 1)

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        agent = self._agent(h)
        return SourceMove(agent, self.final_graph())

    def final_graph(self) -> ManipulationGraph:
        return self.graphs[min(self.survivors) - 1]

    def final_target(self) -> Hypothesis:
        return self.cls[min(self.survivors) - 1]


class ContrarianAdversary:
    """Uniform random features, labels opposite to the learner's realized label."""

    name = "agn-contrarian"
    realizable = False
    supported_settings = _KNOWN_GRAPH

    def __init__(self, fixture: Fixture, seed: int) -> None:
        self.graph = fixture.star_graph
        self._rng = np.random.default_rng(seed)

    def disclose(self, t: int) -> VertexId:
        return int(self._rng.integers(self.graph.n))

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        x = self.disclose(t) if x is None else x
        return SourceMove(Agent(x, 1 - induced_label(self.graph, h, x)), self.graph)

    def final_graph(self) -> ManipulationGraph:
        return self.graph

    def final_target(self) -> None:
        return None


ADVERSARIES: dict[str, Callable[[Fixture, int], AgentSource]] = {
    BinaryRepAdversary.name: lambda fixture, _seed: BinaryRepAdversary(fixture),
    StarAdversary.name: lambda fixture, _seed: StarAdversary(fixture),
    ColumnAdversary.name: lambda fixture, _seed: ColumnAdversary(fixture),
    ChainAdversary.name: lambda fixture, _seed: ChainAdversary(fixture),
    ContrarianAdversary.name: ContrarianAdversary,
}


def adversary(name: str, fixture: Fixture, seed: int = 0) -> AgentSource:
    from utils.suggestions import lookup

    return lookup("adversary", name, ADVERSARIES)(fixture, seed)
