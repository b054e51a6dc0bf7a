"""Domain layer: graphs, hypotheses, learners, constructions and the engine."""

from api.exceptions import (
    BoundViolationError,
    ProtocolError,
    RealizabilityViolationError,
    ResourceBudgetError,
    StrategicLabError,
    ValidationError,
)
from api.feedback import FeedbackSetting, RoundFeedback
from api.graphs import GraphClass, ManipulationGraph, VertexId
from api.hypotheses import Agent, FiniteDistribution, Hypothesis, HypothesisClass

__all__ = [
    "Agent",
    "BoundViolationError",
    "FeedbackSetting",
    "FiniteDistribution",
    "GraphClass",
    "Hypothesis",
    "HypothesisClass",
    "ManipulationGraph",
    "ProtocolError",
    "RealizabilityViolationError",
    "ResourceBudgetError",
    "RoundFeedback",
    "StrategicLabError",
    "ValidationError",
    "VertexId",
]
