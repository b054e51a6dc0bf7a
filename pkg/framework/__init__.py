from framework.experiment import (
    ExperimentConfig,
    FixtureSpec,
    Mode,
    load_config,
    save_config,
)
from framework.matrix import CellKey, CellOutcome, run_matrix, write_matrix
from framework.runner import (
    BoundCheck,
    RunResult,
    build_fixture,
    build_learner,
    build_source,
    dims_report,
    run_cell,
    run_experiment,
)

__all__ = [
    "BoundCheck",
    "CellKey",
    "CellOutcome",
    "ExperimentConfig",
    "FixtureSpec",
    "Mode",
    "RunResult",
    "build_fixture",
    "build_learner",
    "build_source",
    "dims_report",
    "load_config",
    "run_cell",
    "run_experiment",
    "run_matrix",
    "save_config",
    "write_matrix",
]
