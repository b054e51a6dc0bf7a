"""Online learning when only a finite class of candidate graphs is known."""

from __future__ import annotations

import logging
from collections import Counter
from enum import StrEnum

from ..constructions.models import AnyGraphClass
from ..exceptions import ProtocolError, RealizabilityViolationError, ValidationError
from ..feedback import FeedbackSetting, RoundFeedback
from ..graphs import GraphClass, ManipulationGraph, VertexId
from ..hypotheses import Hypothesis, HypothesisClass
from .protocols import AlternatingLearner, Diagnostics
from .reductions import Red2OnlinePMF
from .standard import soa

logger = logging.getLogger(__name__)


class UnknownGraphMode(StrEnum):
    X_THEN_V = "x-then-v"
    PAIR_AFTER = "pair-after"


class UnknownGraphOnline(AlternatingLearner):
    """Majority vote over consistent graphs wrapped around a PMF reduction.

    With x_t disclosed first, a vertex whose arc from x_t appears in at most
    half of the consistent graphs is labeled 1: a mistake there proves the arc
    exists and halves the graph set. Every other vertex of the closed majority
    neighborhood, x_t included, follows an inner Red2OnlinePMF(SOA, 2k), whose
    false negatives are fed that majority neighborhood.

    In pair-after mode x_t arrives with v_t after the round, so predictions
    follow the inner learner everywhere; graphs lacking an observed arc are
    dropped and false negatives use the union of consistent neighborhoods.
    """

    def __init__(
        self,
        cls: HypothesisClass,
        graph_class: AnyGraphClass,
        k_bound: int | None = None,
        mode: UnknownGraphMode = UnknownGraphMode.X_THEN_V,
    ) -> None:
        super().__init__()
        self.graph_class: GraphClass = graph_class.materialize()
        if self.graph_class.n != cls.n:
            raise ValidationError("Graph class and hypothesis class universes differ")
        self.k_bound = self.graph_class.declared_k if k_bound is None else k_bound
        self.mode = mode
        self.needs_x_first = mode is UnknownGraphMode.X_THEN_V
        self.supported_settings = frozenset(
            {
                FeedbackSetting.UG_X_THEN_V
                if self.needs_x_first
                else FeedbackSetting.UG_PAIR_AFTER
            }
        )
        self.inner = Red2OnlinePMF(soa(cls), 2 * self.k_bound, cls.n)
        self.consistent: list[int] = list(range(len(self.graph_class)))
        self.eliminations = 0
        self._x: VertexId | None = None
        self._arc_counts: Counter[VertexId] = Counter()

    @property
    def graphs(self) -> list[ManipulationGraph]:
        return [self.graph_class[i] for i in self.consistent]

    def _count_arcs(self, x: VertexId) -> Counter[VertexId]:
        counts: Counter[VertexId] = Counter()
        for graph in self.graphs:
            counts.update(graph.neighbors(x))
        return counts

    def _is_minority(self, u: VertexId) -> bool:
        return 2 * self._arc_counts[u] <= len(self.consistent)

    def majority_neighborhood(self, x: VertexId) -> tuple[VertexId, ...]:
        """x together with every u whose arc (x, u) is in more than half of G_t."""
        counts = self._count_arcs(x)
        total = len(self.consistent)
        return tuple(sorted({x, *(u for u, c in counts.items() if 2 * c > total)}))

    def _propose(self, x: VertexId | None) -> Hypothesis:
        base = self.inner.current_hypothesis()
        if x is None:
            self._x = None
            return base
        self._x = x
        self._arc_counts = self._count_arcs(x)
        labels = [
            1 if u != x and self._is_minority(u) else base(u)
            for u in range(base.n)
        ]
        return Hypothesis(tuple(labels))

    def _keep_graphs_with_arc(self, x: VertexId, v: VertexId) -> None:
        before = len(self.consistent)
        self.consistent = [
            i for i in self.consistent if self.graph_class[i].has_arc(x, v)
        ]
        if not self.consistent:
            raise RealizabilityViolationError(
                f"No candidate graph contains the observed arc ({x}, {v})"
            )
        if len(self.consistent) < before:
            self.eliminations += 1
            logger.debug(
                "Arc (%d, %d) kept %d of %d graphs", x, v, len(self.consistent), before
            )

    def _observe(self, feedback: RoundFeedback) -> None:
        v = feedback.require_v()
        if self.mode is UnknownGraphMode.PAIR_AFTER:
            self._observe_pair(feedback, feedback.require_x(), v)
            return
        x = self._x
        if x is None or (feedback.x is not None and feedback.x != x):
            raise ProtocolError(f"Round {feedback.t}: x_t does not match the proposal")
        if not feedback.mistake:
            return
        if v != x and self._is_minority(v):
            self._keep_graphs_with_arc(x, v)
            return
        neighborhood = (
            self.majority_neighborhood(v) if feedback.false_negative else None
        )
        self.inner.learn(v, feedback.yhat, feedback.y, neighborhood)

    def _observe_pair(self, feedback: RoundFeedback, x: VertexId, v: VertexId) -> None:
        if v != x:
            self._keep_graphs_with_arc(x, v)
        if not feedback.mistake:
            return
        neighborhood = None
        if feedback.false_negative:
            union = {x}
            for graph in self.graphs:
                union.update(graph.neighbors(x))
            neighborhood = tuple(sorted(union))
        self.inner.learn(v, feedback.yhat, feedback.y, neighborhood)

    def diagnostics(self) -> Diagnostics:
        return self.inner.diagnostics()


def ug_online(
    cls: HypothesisClass,
    graph_class: AnyGraphClass,
    k_bound: int | None = None,
    mode: UnknownGraphMode = UnknownGraphMode.X_THEN_V,
) -> UnknownGraphOnline:
    return UnknownGraphOnline(cls, graph_class, k_bound, mode)
