"""Observation samples as CSV with columns x,v,y."""

from __future__ import annotations

import csv
import logging
from collections.abc import Iterable
from os import PathLike
from pathlib import Path

from api.exceptions import DataAccessError, FixtureFormatError, ValidationError
from api.pac.models import LabeledObservation
from config import ENCODING, SAMPLE_COLUMNS

logger = logging.getLogger(__name__)


def save_sample(
    path: str | PathLike[str],
    sample: Iterable[LabeledObservation],
    encoding: str = ENCODING,
) -> int:
    """Write the sample; returns the number of rows."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    try:
        with open(path, "w", encoding=encoding, newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(SAMPLE_COLUMNS)
            for obs in sample:
                writer.writerow((obs.x, obs.v, obs.y))
                count += 1
    except OSError as e:
        raise DataAccessError(f"Cannot write {path}: {e}") from e
    logger.debug("Wrote %d observations to %s", count, path)
    return count


def load_sample(
    path: str | PathLike[str], encoding: str = ENCODING
) -> list[LabeledObservation]:
    path = Path(path)
    try:
        with open(path, encoding=encoding, newline="") as f:
            reader = csv.DictReader(f)
            if tuple(reader.fieldnames or ()) != SAMPLE_COLUMNS:
                raise FixtureFormatError(
                    f"{path}: header must be {','.join(SAMPLE_COLUMNS)}"
                )
            sample: list[LabeledObservation] = []
            for line, row in enumerate(reader, start=2):
                try:
                    sample.append(
                        LabeledObservation(int(row["x"]), int(row["v"]), int(row["y"]))
                    )
                except (TypeError, ValueError, ValidationError) as e:
                    raise FixtureFormatError(f"{path}: line {line}: {e}") from e
    except OSError as e:
        raise DataAccessError(
            f"Cannot read {path}: {e}", user_message=f"Cannot read {path}"
        ) from e
    return sample
