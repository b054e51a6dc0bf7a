"""Experiment configuration: what to build, what to run, what to assert."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from enum import StrEnum
from os import PathLike
from typing import Self

import config
from api.exceptions import ValidationError
from api.feedback import FeedbackSetting
from utils.json_types import (
    JsonObject,
    field_float,
    field_int,
    field_int_list,
    field_str,
)
from utils.json_utils import load_json, save_json


class Mode(StrEnum):
    ONLINE = "online"
    PAC = "pac"


@dataclass(frozen=True, slots=True)
class FixtureSpec:
    """A named construction with integer parameters, or a fixture directory."""

    construction: str | None = None
    params: Mapping[str, int] = field(default_factory=dict[str, int])
    directory: str | None = None

    def __post_init__(self) -> None:
        if (self.construction is None) == (self.directory is None):
            raise ValidationError(
                "Fixture spec needs exactly one of construction or directory"
            )

    @property
    def label(self) -> str:
        if self.directory is not None:
            return self.directory
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.construction}({args})"

    def to_dict(self) -> JsonObject:
        return {
            "construction": self.construction,
            "params": dict(sorted(self.params.items())),
            "directory": self.directory,
        }

    @classmethod
    def from_dict(cls, data: JsonObject) -> Self:
        params = data.get("params") or {}
        if not isinstance(params, dict) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in params.values()
        ):
            raise ValidationError("Fixture params must map names to integers")
        return cls(
            construction=field_str(data, "construction"),
            params={k: v for k, v in params.items() if isinstance(v, int)},
            directory=field_str(data, "directory"),
        )


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    fixture: FixtureSpec
    learner: str
    seeds: tuple[int, ...]
    setting: FeedbackSetting = FeedbackSetting.FULLY_INFORMATIVE
    mode: Mode = Mode.ONLINE
    rounds: int = 100
    """Online horizon T, or the sample size in PAC mode."""
    holdout: int = 0
    """Second sample size for the agnostic unknown-graph learner (0: split)."""
    noise: float = 0.0
    """Probability mass moved onto label-flipped agents in PAC cells."""
    epsilon: float = config.PAC_EPSILON
    """Slack added to the exact-loss ceilings of PAC cells."""
    source: str = "iid"
    tie_break: str = "lexmin"
    out_dir: str = str(config.OUTPUT_DIR)
    assert_ceilings: bool = True
    assert_floors: bool = True
    assert_invariants: bool = True

    def __post_init__(self) -> None:
        if not self.seeds:
            raise ValidationError(
                "Experiment needs at least one seed",
                user_message="Seeds are mandatory: pass --seed or list them in the config",
            )
        if self.rounds < 1:
            raise ValidationError(f"rounds must be positive, got {self.rounds}")
        if self.holdout < 0:
            raise ValidationError(f"holdout must be non-negative, got {self.holdout}")
        if not 0 <= self.noise <= 1:
            raise ValidationError(f"noise must lie in [0, 1], got {self.noise}")
        if self.epsilon < 0:
            raise ValidationError(f"epsilon must be non-negative, got {self.epsilon}")

    def with_overrides(self, **changes: object) -> Self:
        """Copy with every non-None change applied (flag overrides)."""
        applied = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **applied)  # pyright: ignore[reportArgumentType]

    def to_dict(self) -> JsonObject:
        return {
            "fixture": self.fixture.to_dict(),
            "learner": self.learner,
            "seeds": list(self.seeds),
            "setting": self.setting.value,
            "mode": self.mode.value,
            "rounds": self.rounds,
            "holdout": self.holdout,
            "noise": self.noise,
            "epsilon": self.epsilon,
            "source": self.source,
            "tie_break": self.tie_break,
            "out_dir": self.out_dir,
            "assert_ceilings": self.assert_ceilings,
            "assert_floors": self.assert_floors,
            "assert_invariants": self.assert_invariants,
        }

    @classmethod
    def from_dict(cls, data: JsonObject) -> Self:
        fixture = data.get("fixture")
        learner = field_str(data, "learner")
        seeds = field_int_list(data, "seeds")
        if not isinstance(fixture, dict) or learner is None or seeds is None:
            raise ValidationError(
                "Config needs fixture, learner and seeds",
                user_message="Config must define 'fixture', 'learner' and 'seeds'",
            )
        try:
            mode = Mode(field_str(data, "mode") or Mode.ONLINE.value)
        except ValueError:
            raise ValidationError(f"Unknown mode {data.get('mode')!r}") from None
        epsilon = field_float(data, "epsilon")
        flags = {
            name: value
            for name in ("assert_ceilings", "assert_floors", "assert_invariants")
            if isinstance(value := data.get(name), bool)
        }
        return cls(
            fixture=FixtureSpec.from_dict(fixture),
            learner=learner,
            seeds=tuple(seeds),
            setting=FeedbackSetting.parse(field_str(data, "setting") or "fi"),
            mode=mode,
            rounds=field_int(data, "rounds") or 100,
            holdout=field_int(data, "holdout") or 0,
            noise=field_float(data, "noise") or 0.0,
            epsilon=config.PAC_EPSILON if epsilon is None else epsilon,
            source=field_str(data, "source") or "iid",
            tie_break=field_str(data, "tie_break") or "lexmin",
            out_dir=field_str(data, "out_dir") or str(config.OUTPUT_DIR),
            **flags,
        )


def load_config(path: str | PathLike[str]) -> ExperimentConfig:
    return ExperimentConfig.from_dict(load_json(path))


def save_config(path: str | PathLike[str], experiment: ExperimentConfig) -> None:
    save_json(path, experiment.to_dict())
