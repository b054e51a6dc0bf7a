"""Transcripts as CSV plus a JSON sidecar with the run metadata."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

import config
from api.exceptions import DataAccessError, FixtureFormatError
from api.protocol.transcript import Transcript
from utils.json_types import JsonEncodableObject, JsonObject
from utils.json_utils import load_json, save_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TranscriptRow:
    """One CSV row read back from disk."""

    t: int
    x: int
    v: int
    yhat: int
    y: int
    mistake: int
    experts: int
    total_weight: float
    h: str


@dataclass(frozen=True, slots=True)
class TranscriptStore:
    root: Path
    encoding: str = config.ENCODING

    def paths(self, stem: str) -> tuple[Path, Path]:
        return (
            self.root / f"{stem}{config.TRANSCRIPT_SUFFIX}",
            self.root / f"{stem}{config.SIDECAR_SUFFIX}",
        )

    def save(
        self,
        stem: str,
        transcript: Transcript,
        extra: JsonEncodableObject | None = None,
    ) -> tuple[Path, Path]:
        """Write `<stem>.csv` and `<stem>.json`.

        The sidecar holds the summary plus `extra` (asserted ceilings and the
        like). Wall time stays out of both files so reruns are byte-identical.
        """
        csv_path, sidecar_path = self.paths(stem)
        self.root.mkdir(parents=True, exist_ok=True)
        try:
            with open(csv_path, "w", encoding=self.encoding, newline="") as f:
                writer = csv.DictWriter(
                    f, fieldnames=config.TRANSCRIPT_COLUMNS, lineterminator="\n"
                )
                writer.writeheader()
                for record in transcript:
                    writer.writerow(record.as_row())
        except OSError as e:
            raise DataAccessError(f"Cannot write {csv_path}: {e}") from e
        save_json(
            sidecar_path,
            {**transcript.summary(), **(extra or {})},  # pyright: ignore[reportArgumentType]
            encoding=self.encoding,
        )
        logger.debug("Saved transcript %s (%d rounds)", stem, len(transcript))
        return csv_path, sidecar_path

    def load_rows(self, stem: str) -> list[TranscriptRow]:
        csv_path, _ = self.paths(stem)
        try:
            with open(csv_path, encoding=self.encoding, newline="") as f:
                reader = csv.DictReader(f)
                if tuple(reader.fieldnames or ()) != config.TRANSCRIPT_COLUMNS:
                    raise FixtureFormatError(f"{csv_path}: unexpected header")
                return [
                    TranscriptRow(
                        t=int(row["t"]),
                        x=int(row["x"]),
                        v=int(row["v"]),
                        yhat=int(row["yhat"]),
                        y=int(row["y"]),
                        mistake=int(row["mistake"]),
                        experts=int(row["experts"]),
                        total_weight=float(row["total_weight"]),
                        h=row["h"],
                    )
                    for row in reader
                ]
        except OSError as e:
            raise DataAccessError(f"Cannot read {csv_path}: {e}") from e
        except (KeyError, ValueError) as e:
            raise FixtureFormatError(f"{csv_path}: {e}") from e

    def load_sidecar(self, stem: str) -> JsonObject:
        return load_json(self.paths(stem)[1], self.encoding)
