"""Learner x setting sweeps, run cell by cell on worker threads."""

from __future__ import annotations

import asyncio
import csv
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import config
from api.exceptions import ProtocolError, StrategicLabError
from api.feedback import FeedbackSetting

from .experiment import ExperimentConfig
from .runner import RunResult, run_cell, write_result

logger = logging.getLogger(__name__)

MATRIX_COLUMNS = (
    "fixture",
    "learner",
    "setting",
    "source",
    "seed",
    "rounds",
    "mistakes",
    "best_loss",
    "regret",
    "expected_regret",
    "strategic_loss",
    "neighborhood_loss",
    "checks",
    "status",
)


@dataclass(frozen=True, slots=True, order=True)
class CellKey:
    learner: str
    setting: str
    seed: int


@dataclass(frozen=True, slots=True)
class CellOutcome:
    key: CellKey
    result: RunResult | None
    status: str
    """pass, FAIL, skipped (incompatible learner/setting) or error."""
    detail: str = ""

    def as_row(self, experiment: ExperimentConfig) -> dict[str, str]:
        summary = self.result.summary if self.result is not None else {}
        checks = self.result.checks if self.result is not None else []

        def cell(name: str) -> str:
            value = summary.get(name)
            return "" if value is None else str(value)

        return {
            "fixture": experiment.fixture.label,
            "learner": self.key.learner,
            "setting": self.key.setting,
            "source": experiment.source,
            "seed": str(self.key.seed),
            "rounds": str(experiment.rounds),
            "mistakes": cell("mistakes"),
            "best_loss": cell("best_loss"),
            "regret": cell("regret"),
            "expected_regret": cell("expected_regret"),
            "strategic_loss": cell("strategic_loss"),
            "neighborhood_loss": cell("neighborhood_loss"),
            "checks": ";".join(
                f"{c.name}={c.observed:g}/{c.limit:g}" for c in checks
            ),
            "status": self.status if not self.detail else f"{self.status}: {self.detail}",
        }


def _run_cell(experiment: ExperimentConfig, key: CellKey) -> CellOutcome:
    cell = experiment.with_overrides(
        learner=key.learner, setting=FeedbackSetting(key.setting)
    )
    try:
        result = run_cell(cell, key.seed)
    except ProtocolError as e:
        return CellOutcome(key, None, "skipped", e.user_message)
    except StrategicLabError as e:
        logger.warning("Cell %s failed: %s", key, e)
        return CellOutcome(key, None, "error", e.user_message)
    return CellOutcome(key, result, "pass" if result.passed else "FAIL")


async def run_matrix_async(
    experiment: ExperimentConfig,
    learners: Sequence[str],
    settings: Sequence[FeedbackSetting],
    workers: int = config.MATRIX_WORKERS,
) -> list[CellOutcome]:
    """Every (learner, setting, seed) cell; results sorted by cell key."""
    semaphore = asyncio.Semaphore(max(1, workers))
    keys = [
        CellKey(learner, setting.value, seed)
        for learner in learners
        for setting in settings
        for seed in experiment.seeds
    ]

    async def guarded(key: CellKey) -> CellOutcome:
        async with semaphore:
            return await asyncio.to_thread(_run_cell, experiment, key)

    async with asyncio.TaskGroup() as group:
        tasks = [group.create_task(guarded(key)) for key in keys]
    return sorted((task.result() for task in tasks), key=lambda o: o.key)


def run_matrix(
    experiment: ExperimentConfig,
    learners: Sequence[str],
    settings: Sequence[FeedbackSetting],
    workers: int = config.MATRIX_WORKERS,
) -> list[CellOutcome]:
    return asyncio.run(run_matrix_async(experiment, learners, settings, workers))


def write_matrix(
    experiment: ExperimentConfig,
    outcomes: Sequence[CellOutcome],
    out_dir: Path,
    write_cells: bool = True,
) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / config.MATRIX_FILE_NAME
    with open(path, "w", encoding=config.ENCODING, newline="") as f:
        writer = csv.DictWriter(f, fieldnames=MATRIX_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for outcome in outcomes:
            writer.writerow(outcome.as_row(experiment))
    if write_cells:
        for outcome in outcomes:
            if outcome.result is not None:
                write_result(outcome.result, out_dir)
    logger.info("Matrix of %d cells written to %s", len(outcomes), path)
    return path
