"""Agnostic online learning in the fully informative setting.

A finite cover of experts replays a realizable learner on self-labeled
history, flipping its induced prediction at a chosen set of at most M
rounds. Some expert then matches every hypothesis of the class on the whole
sequence, and Hedge over the cover competes with the best of them.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Callable, Sequence

import numpy as np

import config

from ..bounds import fi_ceiling, hedge_learning_rate
from ..dimensions import littlestone_dimension
from ..exceptions import RealizabilityViolationError, ResourceBudgetError, ValidationError
from ..feedback import FeedbackSetting, RoundFeedback
from ..graphs import ManipulationGraph, VertexId
from ..hypotheses import Agent, Hypothesis, HypothesisClass
from ..strategic import best_response, induced_label, mixture_strategic_loss, strategic_loss
from .protocols import AlternatingLearner, Diagnostics, StrategicOnlineLearner
from .reductions import red2online_fi
from .standard import soa

logger = logging.getLogger(__name__)

type LearnerFactory = Callable[[], StrategicOnlineLearner]


def cover_size(horizon: int, mistake_budget: int) -> int:
    """Number of index sets of size at most M drawn from T rounds."""
    return sum(math.comb(horizon, size) for size in range(min(mistake_budget, horizon) + 1))


def fit_cover_budget(horizon: int, mistake_budget: int) -> int:
    """Largest M' ≤ M whose cover fits the expert budget."""
    fitted = mistake_budget
    while fitted > 0 and cover_size(horizon, fitted) > config.EXPERT_BUDGET:
        fitted -= 1
    if fitted < mistake_budget:
        logger.warning(
            "Expert cover for T=%d lowered from M=%d to M=%d (%d experts, budget %d)",
            horizon,
            mistake_budget,
            fitted,
            cover_size(horizon, fitted),
            config.EXPERT_BUDGET,
        )
    return fitted


class CoverExpert:
    """Replays a realizable learner, flipping its induced label at `flips`."""

    __slots__ = ("flips", "graph", "inner")

    def __init__(
        self,
        inner: StrategicOnlineLearner,
        graph: ManipulationGraph,
        flips: frozenset[int],
    ) -> None:
        self.inner = inner
        self.graph = graph
        self.flips = flips

    def propose(self, t: int, x: VertexId) -> Hypothesis:
        """Hypothesis for round t (1-based); the inner learner is updated at once.

        The self-assigned label does not depend on y_t, so the update needs no
        feedback from the round itself.
        """
        proposal = self.inner.propose(x)
        closed = self.graph.closed_neighbors(x)
        if t not in self.flips:
            played = proposal
            label = induced_label(self.graph, proposal, x)
        elif all(proposal(u) == 0 for u in closed):
            labels = list(proposal.labels)
            labels[x] = 1
            played, label = Hypothesis(tuple(labels)), 1
        else:
            labels = list(proposal.labels)
            for u in closed:
                labels[u] = 0
            played, label = Hypothesis(tuple(labels)), 0
        v = best_response(self.graph, proposal, x)
        self.inner.observe(
            RoundFeedback(
                t=t,
                hypothesis=proposal,
                yhat=proposal(v),
                y=label,
                x=x,
                v=v,
                neighborhood=closed,
            )
        )
        return played


def expert_cover(
    factory: LearnerFactory,
    graph: ManipulationGraph,
    horizon: int,
    mistake_budget: int,
) -> list[CoverExpert]:
    """One expert per index set {i_1 < ... < i_L} ⊆ [T] with L ≤ M."""
    if horizon < 1 or mistake_budget < 0:
        raise ValidationError("Horizon must be positive and M non-negative")
    size = cover_size(horizon, mistake_budget)
    if size > config.EXPERT_BUDGET:
        raise ResourceBudgetError(
            f"Cover of {size} experts exceeds budget {config.EXPERT_BUDGET}",
            reached=size,
        )
    rounds = range(1, horizon + 1)
    return [
        CoverExpert(factory(), graph, frozenset(flips))
        for length in range(min(mistake_budget, horizon) + 1)
        for flips in itertools.combinations(rounds, length)
    ]


class HedgeOverCover(AlternatingLearner):
    """Multiplicative weights with η = sqrt(8 ln N / T) over cover experts.

    The played hypothesis is sampled from the weights; the expected strategic
    loss of the mixture is tracked for regret accounting. Experts whose inner
    learner meets an inconsistent self-labeled feed are dropped.
    """

    needs_x_first = True

    def __init__(
        self,
        experts: Sequence[CoverExpert],
        graph: ManipulationGraph,
        horizon: int,
        seed: int,
        mistake_budget: int | None = None,
    ) -> None:
        super().__init__()
        if not experts:
            raise ValidationError("Hedge needs at least one expert")
        self.experts = list(experts)
        self.graph = graph
        self.horizon = horizon
        self.mistake_budget = mistake_budget
        """M the cover was built for, when known."""
        self.eta = hedge_learning_rate(horizon, len(self.experts))
        self.initial_experts = len(self.experts)
        self.weights = np.ones(len(self.experts))
        self.expected_loss_total = 0.0
        self.supported_settings = frozenset({FeedbackSetting.FULLY_INFORMATIVE})
        self._rng = np.random.default_rng(seed)
        self._proposals: list[Hypothesis] = []
        self._probabilities = self.weights
        self._last_expected: float | None = None

    def _propose(self, x: VertexId | None) -> Hypothesis:
        assert x is not None
        proposals: list[Hypothesis] = []
        alive: list[int] = []
        for i, expert in enumerate(self.experts):
            try:
                proposals.append(expert.propose(self._round, x))
            except RealizabilityViolationError:
                continue
            alive.append(i)
        if not alive:
            raise RealizabilityViolationError("Every cover expert was eliminated")
        if len(alive) < len(self.experts):
            logger.debug("Dropped %d cover experts", len(self.experts) - len(alive))
            self.experts = [self.experts[i] for i in alive]
            self.weights = self.weights[alive]
        self._proposals = proposals
        self._probabilities = self.weights / self.weights.sum()
        pick = int(self._rng.choice(len(proposals), p=self._probabilities))
        return proposals[pick]

    def _observe(self, feedback: RoundFeedback) -> None:
        agent = Agent(feedback.require_x(), feedback.y)
        losses = np.array(
            [strategic_loss(self.graph, h, agent) for h in self._proposals],
            dtype=float,
        )
        self._last_expected = mixture_strategic_loss(
            self.graph,
            list(zip(self._proposals, self._probabilities.tolist(), strict=True)),
            agent,
        )
        self.expected_loss_total += self._last_expected
        self.weights = self.weights * np.exp(-self.eta * losses)
        self.weights /= self.weights.max()

    def diagnostics(self) -> Diagnostics:
        return Diagnostics(
            experts=len(self.experts),
            total_weight=float(self.weights.sum()),
            expected_loss=self._last_expected,
        )


def agnostic_online_fi(
    cls: HypothesisClass,
    graph: ManipulationGraph,
    horizon: int,
    seed: int,
    mistake_budget: int | None = None,
) -> HedgeOverCover:
    """Hedge over the cover of Red2OnlineFI(SOA).

    M defaults to the realizable ceiling of the inner learner, lowered until
    the cover fits the expert budget.
    """
    if mistake_budget is None:
        ldim = littlestone_dimension(cls)
        mistake_budget = fit_cover_budget(
            horizon, fi_ceiling(ldim, graph.max_out_degree)
        )
    base = soa(cls)
    experts = expert_cover(
        lambda: red2online_fi(base.copy(), graph), graph, horizon, mistake_budget
    )
    logger.info(
        "Hedge over %d cover experts (T=%d, M=%d)", len(experts), horizon, mistake_budget
    )
    return HedgeOverCover(experts, graph, horizon, seed, mistake_budget)
