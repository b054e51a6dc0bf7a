"""Reductions from strategic to standard online learning.

Both reductions run a weighted pool of copies of a standard learner.
Mistakes shrink the total weight geometrically while the copy fed with the
target's own examples keeps at least (1/(2(k+1)))^M of it, which bounds the
number of mistakes.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..exceptions import ProtocolError, ValidationError
from ..feedback import FeedbackSetting, RoundFeedback
from ..graphs import ManipulationGraph, VertexId
from ..hypotheses import Hypothesis
from ..strategic import best_response
from .experts import Expert, ExpertPool
from .protocols import AlternatingLearner, Diagnostics, StandardOnlineLearner

logger = logging.getLogger(__name__)


class Red2OnlineFI(AlternatingLearner):
    """Fully informative reduction: x_t is known before h_t is chosen.

    Play 1{x_t} when experts positive somewhere on N[x_t] hold at least half
    the weight, otherwise play all-negative.
    """

    needs_x_first = True

    def __init__(self, learner: StandardOnlineLearner, graph: ManipulationGraph) -> None:
        super().__init__()
        self.graph = graph
        self.pool = ExpertPool(learner)
        self.supported_settings = frozenset({FeedbackSetting.FULLY_INFORMATIVE})
        self._x: VertexId | None = None
        self._witnesses: list[tuple[Expert, VertexId | None]] = []

    def _propose(self, x: VertexId | None) -> Hypothesis:
        assert x is not None
        self._x = x
        closed = self.graph.closed_neighbors(x)
        self._witnesses = [(e, e.positive_on(closed)) for e in self.pool.experts]
        positive = sum(e.weight for e, u in self._witnesses if u is not None)
        if 2 * positive >= self.pool.total_weight:
            return Hypothesis.from_positive(self.graph.n, (x,))
        return Hypothesis.all_negative(self.graph.n)

    def _observe(self, feedback: RoundFeedback) -> None:
        if feedback.require_x() != self._x:
            raise ProtocolError(
                f"Round {feedback.t}: feedback x_t={feedback.x} but proposed for {self._x}"
            )
        if feedback.false_positive:
            self.pool.penalize(
                [(e, u) for e, u in self._witnesses if u is not None]
            )
        elif feedback.false_negative:
            self.pool.split(
                [e for e, u in self._witnesses if u is None],
                self.graph.closed_neighbors(self._x),
            )

    def diagnostics(self) -> Diagnostics:
        return Diagnostics(len(self.pool), float(self.pool.total_weight))


class Red2OnlinePMF(AlternatingLearner):
    """Post-manipulation reduction: nothing is known before h_t is chosen.

    h_t(x) = 1 iff experts positive at x hold at least 1/(2(k+1)) of the
    weight. A false negative means v_t = x_t, so N[v_t] is the neighborhood
    to split over.
    """

    def __init__(
        self,
        learner: StandardOnlineLearner,
        k_bound: int,
        n: int,
        graph: ManipulationGraph | None = None,
    ) -> None:
        super().__init__()
        if k_bound < 0:
            raise ValidationError("k_bound must be non-negative")
        if graph is not None and graph.n != n:
            raise ValidationError("Graph universe does not match n")
        self.k_bound = k_bound
        self.n = n
        self.graph = graph
        self.pool = ExpertPool(learner)
        settings = {FeedbackSetting.PMF_V, FeedbackSetting.FULLY_INFORMATIVE}
        if graph is not None:
            settings.add(FeedbackSetting.PMF_X)
        self.supported_settings = frozenset(settings)

    def current_hypothesis(self) -> Hypothesis:
        total = self.pool.total_weight
        scale = 2 * (self.k_bound + 1)
        return Hypothesis(
            tuple(
                int(scale * self.pool.positive_weight(x) >= total)
                for x in range(self.n)
            )
        )

    def learn(
        self,
        v: VertexId,
        yhat: int,
        y: int,
        neighborhood: Sequence[VertexId] | None,
    ) -> None:
        """Update on the observed node v_t; neighborhood is N[v_t] on false negatives."""
        if yhat == y:
            return
        if y == 0:
            self.pool.penalize(
                [(e, v) for e in self.pool.experts if e.learner.predict(v)]
            )
            return
        if neighborhood is None:
            raise ProtocolError("False negative without neighborhood feedback")
        if v not in neighborhood:
            raise ProtocolError(f"Neighborhood of {v} must contain {v} itself")
        self.pool.split(
            [e for e in self.pool.experts if e.positive_on(neighborhood) is None],
            neighborhood,
        )

    def _propose(self, x: VertexId | None) -> Hypothesis:
        return self.current_hypothesis()

    def _observe(self, feedback: RoundFeedback) -> None:
        if not feedback.mistake:
            return
        if feedback.v is not None:
            v = feedback.v
        elif feedback.false_negative:
            v = feedback.require_x()
        elif self.graph is not None:
            # Any positive vertex the agent could reach is labeled 0 by the
            # target, so the lexicographic response is as good as the real one.
            v = best_response(self.graph, feedback.hypothesis, feedback.require_x())
        else:
            raise ProtocolError(
                f"Round {feedback.t}: false positive without v_t needs the graph"
            )
        neighborhood = feedback.neighborhood
        if feedback.false_negative and neighborhood is None and self.graph is not None:
            neighborhood = self.graph.closed_neighbors(v)
        self.learn(v, feedback.yhat, feedback.y, neighborhood)

    def diagnostics(self) -> Diagnostics:
        return Diagnostics(len(self.pool), float(self.pool.total_weight))


def red2online_fi(
    learner: StandardOnlineLearner, graph: ManipulationGraph
) -> Red2OnlineFI:
    return Red2OnlineFI(learner, graph)


def red2online_pmf(
    learner: StandardOnlineLearner,
    k_bound: int,
    n: int,
    graph: ManipulationGraph | None = None,
) -> Red2OnlinePMF:
    return Red2OnlinePMF(learner, k_bound, n, graph)
