"""Batch learners for known and unknown manipulation graphs."""

from .erm import empirical_losses, erm_index, erm_strategic, induced_matrix
from .models import ClickObservation, GraphHypothesisPair, LabeledObservation
from .neighborhoods import NeighborhoodMode, explains_clicks, learn_neighborhoods
from .unknown_graph import (
    empirical_degree,
    empirical_proxy_loss,
    exact_neighborhood_loss,
    exact_proxy_loss,
    explains_moves,
    split_ratio,
    split_sample,
    strategic_loss_decomposition,
    ug_agnostic,
    ug_realizable,
)

__all__ = [
    "ClickObservation",
    "GraphHypothesisPair",
    "LabeledObservation",
    "NeighborhoodMode",
    "empirical_degree",
    "empirical_losses",
    "empirical_proxy_loss",
    "erm_index",
    "erm_strategic",
    "exact_neighborhood_loss",
    "exact_proxy_loss",
    "explains_clicks",
    "explains_moves",
    "induced_matrix",
    "learn_neighborhoods",
    "split_ratio",
    "split_sample",
    "strategic_loss_decomposition",
    "ug_agnostic",
    "ug_realizable",
]
