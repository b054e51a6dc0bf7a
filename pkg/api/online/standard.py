"""Classical online learners: SOA and Halving over a finite class.

Both keep the version space as a bitmask over the class members, so cloning
is a copy of one integer plus a shared reference to the class tables.
"""

from __future__ import annotations

import logging
from typing import Self

from ..dimensions import LittlestoneOracle
from ..exceptions import RealizabilityViolationError, ValidationError
from ..feedback import FeedbackSetting, RoundFeedback
from ..graphs import VertexId
from ..hypotheses import Hypothesis, HypothesisClass
from .protocols import AlternatingLearner, Diagnostics

logger = logging.getLogger(__name__)


class _VersionSpaceLearner:
    __slots__ = ("_oracle", "cls", "space")

    def __init__(
        self, cls: HypothesisClass, oracle: LittlestoneOracle, space: int
    ) -> None:
        self.cls = cls
        self._oracle = oracle
        self.space = space

    def _restrict(self, x: VertexId, label: int) -> int:
        column = self._oracle.column(x)
        return self.space & (column if label else ~column)

    def predict(self, x: VertexId) -> int:
        raise NotImplementedError

    def update(self, x: VertexId, label: int) -> None:
        if label not in (0, 1):
            raise ValidationError(f"Label must be 0 or 1, got {label!r}")
        space = self._restrict(x, label)
        if not space:
            raise RealizabilityViolationError(
                f"No hypothesis in the version space labels {x} as {label}"
            )
        self.space = space

    def copy(self) -> Self:
        """Independent state over the same class tables."""
        return type(self)(self.cls, self._oracle, self.space)

    def clone_with_example(self, x: VertexId, label: int) -> Self:
        clone = self.copy()
        clone.update(x, label)
        return clone

    @property
    def version_space(self) -> tuple[Hypothesis, ...]:
        return tuple(
            h for i, h in enumerate(self.cls) if (self.space >> i) & 1
        )

    def __len__(self) -> int:
        return self.space.bit_count()


class SOA(_VersionSpaceLearner):
    """Predict the label whose restriction keeps the larger Littlestone dimension.

    Ties go to 1. Mistakes on realizable sequences are at most Ldim(H).
    """

    __slots__ = ()

    def predict(self, x: VertexId) -> int:
        ones = self._restrict(x, 1)
        zeros = self._restrict(x, 0)
        return int(self._oracle.ldim(ones) >= self._oracle.ldim(zeros))

    @property
    def ldim(self) -> int:
        return self._oracle.ldim(self.space)


class Halving(_VersionSpaceLearner):
    """Majority vote of the version space; ties go to 1."""

    __slots__ = ()

    def predict(self, x: VertexId) -> int:
        return int(2 * self._restrict(x, 1).bit_count() >= self.space.bit_count())


def soa(cls: HypothesisClass) -> SOA:
    oracle = LittlestoneOracle.for_class(cls)
    logger.debug("SOA over %d hypotheses, Ldim %d", len(cls), oracle.ldim(oracle.full))
    return SOA(cls, oracle, oracle.full)


def halving(cls: HypothesisClass) -> Halving:
    oracle = LittlestoneOracle.for_class(cls)
    return Halving(cls, oracle, oracle.full)


class StandardBaseline(AlternatingLearner):
    """Plays a classical learner's labeling and ignores manipulation.

    Trained on (x_t, y_t) when x_t is observed, otherwise on (v_t, y_t). On an
    arcless graph this is classical online learning. Examples that would empty
    the version space are skipped.
    """

    def __init__(self, learner: SOA | Halving) -> None:
        super().__init__()
        self.learner = learner
        self.supported_settings = frozenset(FeedbackSetting)
        self.skipped = 0

    def _propose(self, x: VertexId | None) -> Hypothesis:
        return Hypothesis(
            tuple(self.learner.predict(u) for u in range(self.learner.cls.n))
        )

    def _observe(self, feedback: RoundFeedback) -> None:
        point = feedback.x if feedback.x is not None else feedback.require_v()
        try:
            self.learner.update(point, feedback.y)
        except RealizabilityViolationError:
            self.skipped += 1
            logger.warning(
                "Round %d: (%d, %d) contradicts every remaining hypothesis",
                feedback.t,
                point,
                feedback.y,
            )

    def diagnostics(self) -> Diagnostics:
        size = len(self.learner)
        return Diagnostics(experts=size, total_weight=float(size))
