"""Lab configuration and environment variables."""

import os
from pathlib import Path
from typing import Final

from dotenv import load_dotenv

load_dotenv()


# --- Environment variables ---
# All optional; defaults are sized for desk-scale experiments.
OUTPUT_DIR = Path(os.getenv("STRATLAB_OUTPUT_DIR", "output"))
MAX_UNIVERSE = int(os.getenv("STRATLAB_MAX_UNIVERSE", 64))
"""Largest vertex set the dimension oracles and constructions accept."""
MAX_CLASS_SIZE = int(os.getenv("STRATLAB_MAX_CLASS_SIZE", 4096))
"""Largest hypothesis class the dimension oracles accept."""
EXPERT_BUDGET = int(os.getenv("STRATLAB_EXPERT_BUDGET", 4096))
"""Largest expert cover the agnostic online learner will build."""
DEFAULT_SEED = int(os.getenv("STRATLAB_DEFAULT_SEED", 0))
MATRIX_WORKERS = int(os.getenv("STRATLAB_MATRIX_WORKERS", 4))
PAC_EPSILON = float(os.getenv("STRATLAB_PAC_EPSILON", 0.05))
"""Additive slack on the batch learners' exact-loss ceilings."""
LOG_LEVEL = os.getenv("STRATLAB_LOG_LEVEL", "INFO").upper()


# --- Directory structure ---
BASE_DIR = Path(__file__).resolve().parent
LOG_DIR = BASE_DIR / "logs"


# --- System constants ---
ENCODING = "utf-8"
"""Default text encoding for file I/O operations."""
MATERIALIZE_LIMIT = 4
"""Exponential graph classes are enumerated explicitly only up to this n."""
MAX_SPLIT_RATIO = 9
"""Cap on the S1:S2 proportion used by the agnostic unknown-graph learner."""
MONTE_CARLO_DRAWS = 100_000
VOTE_WEIGHT_FLOOR = 0.0
"""Experts lighter than this are pruned; 0 disables pruning."""


# --- Output files ---
# fmt: off
_JSON_SUFFIX: Final = ".json"
_CSV_SUFFIX: Final = ".csv"
GRAPH_FILE_NAME = "graph.txt"
CLASS_FILE_NAME = "class.txt"
GRAPH_CLASS_FILE_NAME = "graphs.txt"
SAMPLE_FILE_NAME = f"sample{_CSV_SUFFIX}"
MANIFEST_FILE_NAME = f"manifest{_JSON_SUFFIX}"
TRANSCRIPT_SUFFIX = _CSV_SUFFIX
SIDECAR_SUFFIX = _JSON_SUFFIX
MATRIX_FILE_NAME = f"matrix{_CSV_SUFFIX}"
# fmt: on

TRANSCRIPT_COLUMNS: Final = (
    "t",
    "x",
    "v",
    "yhat",
    "y",
    "mistake",
    "experts",
    "total_weight",
    "h",
)
SAMPLE_COLUMNS: Final = ("x", "v", "y")
