"""Interaction engine, agent sources and transcripts."""

from .adversaries import (
    ADVERSARIES,
    BinaryRepAdversary,
    ChainAdversary,
    ColumnAdversary,
    ContrarianAdversary,
    StarAdversary,
    adversary,
)
from .engine import best_in_hindsight, check_compatible, run_online
from .sampling import Probe, collect_pac_sample
from .sources import AgentSource, IIDSource, SourceMove
from .transcript import RoundRecord, Transcript

__all__ = [
    "ADVERSARIES",
    "AgentSource",
    "BinaryRepAdversary",
    "ChainAdversary",
    "ColumnAdversary",
    "ContrarianAdversary",
    "IIDSource",
    "Probe",
    "RoundRecord",
    "SourceMove",
    "StarAdversary",
    "Transcript",
    "adversary",
    "best_in_hindsight",
    "check_compatible",
    "collect_pac_sample",
    "run_online",
]
