"""Feedback settings and the per-round feedback record learners consume."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from .exceptions import ProtocolError, ValidationError
from .graphs import VertexId
from .hypotheses import Hypothesis


class FeedbackSetting(StrEnum):
    """What the learner sees, and when, in one round."""

    FULLY_INFORMATIVE = "fi"
    """Graph known; x_t disclosed before h_t; v_t and y_t after."""
    PMF_X = "pmf-x"
    """Graph known; x_t and y_t after the round."""
    PMF_V = "pmf-v"
    """Graph known; v_t and y_t after the round."""
    UG_X_THEN_V = "ug"
    """Graph unknown; x_t before h_t, v_t and y_t after."""
    UG_PAIR_AFTER = "ug-pair"
    """Graph unknown; (x_t, v_t) and y_t after the round."""

    @property
    def discloses_x_first(self) -> bool:
        return self in (FeedbackSetting.FULLY_INFORMATIVE, FeedbackSetting.UG_X_THEN_V)

    @property
    def graph_known(self) -> bool:
        return self in (
            FeedbackSetting.FULLY_INFORMATIVE,
            FeedbackSetting.PMF_X,
            FeedbackSetting.PMF_V,
        )

    @classmethod
    def parse(cls, value: str) -> FeedbackSetting:
        try:
            return cls(value.strip().lower())
        except ValueError:
            choices = ", ".join(s.value for s in cls)
            raise ValidationError(
                f"Unknown feedback setting {value!r}",
                user_message=f"Setting must be one of: {choices}",
            ) from None


@dataclass(frozen=True, slots=True)
class RoundFeedback:
    """What the learner is told after round t.

    Fields the setting withholds are None. `neighborhood` carries the closed
    neighborhood N_{G⋆}[v_t] on false negatives in the known-graph settings.
    """

    t: int
    hypothesis: Hypothesis
    yhat: int
    y: int
    x: VertexId | None = None
    v: VertexId | None = None
    neighborhood: tuple[VertexId, ...] | None = None

    @property
    def mistake(self) -> bool:
        return self.yhat != self.y

    @property
    def false_positive(self) -> bool:
        return self.yhat == 1 and self.y == 0

    @property
    def false_negative(self) -> bool:
        return self.yhat == 0 and self.y == 1

    def require_x(self) -> VertexId:
        if self.x is None:
            raise ProtocolError(f"Round {self.t}: feedback carries no x_t")
        return self.x

    def require_v(self) -> VertexId:
        if self.v is None:
            raise ProtocolError(f"Round {self.t}: feedback carries no v_t")
        return self.v

    def require_neighborhood(self) -> tuple[VertexId, ...]:
        if self.neighborhood is None:
            raise ProtocolError(
                f"Round {self.t}: false negative without neighborhood feedback"
            )
        return self.neighborhood
