"""Online learners: classical, strategic reductions and agnostic Hedge."""

from .agnostic import (
    CoverExpert,
    HedgeOverCover,
    agnostic_online_fi,
    cover_size,
    expert_cover,
    fit_cover_budget,
)
from .experts import Expert, ExpertPool
from .protocols import (
    AlternatingLearner,
    Diagnostics,
    StandardOnlineLearner,
    StrategicOnlineLearner,
)
from .reductions import Red2OnlineFI, Red2OnlinePMF, red2online_fi, red2online_pmf
from .standard import SOA, Halving, StandardBaseline, halving, soa
from .unknown_graph import UnknownGraphMode, UnknownGraphOnline, ug_online

__all__ = [
    "SOA",
    "AlternatingLearner",
    "CoverExpert",
    "Diagnostics",
    "Expert",
    "ExpertPool",
    "Halving",
    "HedgeOverCover",
    "Red2OnlineFI",
    "Red2OnlinePMF",
    "StandardBaseline",
    "StandardOnlineLearner",
    "StrategicOnlineLearner",
    "UnknownGraphMode",
    "UnknownGraphOnline",
    "agnostic_online_fi",
    "cover_size",
    "expert_cover",
    "fit_cover_budget",
    "halving",
    "red2online_fi",
    "red2online_pmf",
    "soa",
    "ug_online",
]
