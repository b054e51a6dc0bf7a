"""Per-round records and run-level aggregates."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from ..feedback import FeedbackSetting
from ..graphs import VertexId
from ..hypotheses import Agent, Hypothesis


@dataclass(frozen=True, slots=True)
class RoundRecord:
    t: int
    x: VertexId
    v: VertexId
    hypothesis: Hypothesis
    yhat: int
    y: int
    experts: int = 1
    total_weight: float = 1.0
    expected_loss: float | None = None

    @property
    def mistake(self) -> int:
        return int(self.yhat != self.y)

    @property
    def agent(self) -> Agent:
        return Agent(self.x, self.y)

    def as_row(self) -> dict[str, str]:
        """CSV row; h_t is stored as its digest."""
        return {
            "t": str(self.t),
            "x": str(self.x),
            "v": str(self.v),
            "h": self.hypothesis.digest(),
            "yhat": str(self.yhat),
            "y": str(self.y),
            "mistake": str(self.mistake),
            "experts": str(self.experts),
            "total_weight": repr(self.total_weight),
        }


@dataclass(slots=True)
class Transcript:
    fixture: str
    learner: str
    setting: FeedbackSetting
    seed: int
    tie_break: str = "lexmin"
    source: str = "iid"
    records: list[RoundRecord] = field(default_factory=list[RoundRecord])
    best_loss: int | None = None
    """Cumulative loss of the best fixed hypothesis in hindsight."""
    best_index: int | None = None
    target_loss: int | None = None
    """Replayed loss of the source's declared target, for realizable runs."""
    wall_time: float = 0.0

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[RoundRecord]:
        return iter(self.records)

    @property
    def mistakes(self) -> int:
        return sum(r.mistake for r in self.records)

    @property
    def agents(self) -> list[Agent]:
        return [r.agent for r in self.records]

    @property
    def regret(self) -> int | None:
        if self.best_loss is None:
            return None
        return self.mistakes - self.best_loss

    @property
    def expected_loss(self) -> float | None:
        values = [r.expected_loss for r in self.records]
        if not values or any(v is None for v in values):
            return None
        return sum(v for v in values if v is not None)

    @property
    def expected_regret(self) -> float | None:
        loss = self.expected_loss
        if loss is None or self.best_loss is None:
            return None
        return loss - self.best_loss

    def summary(self) -> dict[str, object]:
        return {
            "fixture": self.fixture,
            "learner": self.learner,
            "setting": self.setting.value,
            "source": self.source,
            "seed": self.seed,
            "tie_break": self.tie_break,
            "rounds": len(self.records),
            "mistakes": self.mistakes,
            "best_loss": self.best_loss,
            "best_index": self.best_index,
            "regret": self.regret,
            "expected_loss": self.expected_loss,
            "expected_regret": self.expected_regret,
            "target_loss": self.target_loss,
        }
