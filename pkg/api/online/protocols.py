"""Protocols for the online learners."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Protocol, Self

from ..exceptions import ProtocolError
from ..feedback import FeedbackSetting, RoundFeedback
from ..graphs import VertexId
from ..hypotheses import Hypothesis


class StandardOnlineLearner(Protocol):
    """A classical mistake-bounded learner over a fixed hypothesis class."""

    def predict(self, x: VertexId) -> int: ...

    def update(self, x: VertexId, label: int) -> None: ...

    def clone_with_example(self, x: VertexId, label: int) -> Self:
        """A copy that has additionally seen (x, label); self is untouched."""
        ...


@dataclass(frozen=True, slots=True)
class Diagnostics:
    experts: int = 1
    total_weight: float = 1.0
    expected_loss: float | None = None
    """Expected strategic loss of the last round, for randomized learners."""


class StrategicOnlineLearner(Protocol):
    supported_settings: frozenset[FeedbackSetting]

    def propose(self, x: VertexId | None) -> Hypothesis: ...

    def observe(self, feedback: RoundFeedback) -> None: ...

    def diagnostics(self) -> Diagnostics: ...


class AlternatingLearner(ABC):
    """Enforces propose/observe alternation and the x_t disclosure rules."""

    supported_settings: frozenset[FeedbackSetting]
    needs_x_first: bool = False

    def __init__(self) -> None:
        self._pending: Hypothesis | None = None
        self._round = 0

    def propose(self, x: VertexId | None) -> Hypothesis:
        if self._pending is not None:
            raise ProtocolError(f"Round {self._round}: propose called twice")
        if self.needs_x_first and x is None:
            raise ProtocolError(
                f"{type(self).__name__} needs x_t before choosing a hypothesis"
            )
        self._round += 1
        self._pending = self._propose(x)
        return self._pending

    def observe(self, feedback: RoundFeedback) -> None:
        if self._pending is None:
            raise ProtocolError(f"Round {feedback.t}: observe before propose")
        if feedback.hypothesis != self._pending:
            raise ProtocolError(
                f"Round {feedback.t}: feedback refers to another hypothesis"
            )
        self._pending = None
        self._observe(feedback)

    def diagnostics(self) -> Diagnostics:
        return Diagnostics()

    @abstractmethod
    def _propose(self, x: VertexId | None) -> Hypothesis: ...

    @abstractmethod
    def _observe(self, feedback: RoundFeedback) -> None: ...
