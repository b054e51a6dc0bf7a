"""Strategic empirical risk minimization over a finite class."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from ..exceptions import ValidationError
from ..graphs import ManipulationGraph, check_vertex
from ..hypotheses import Agent, Hypothesis, HypothesisClass
from ..strategic import induced_labeling

logger = logging.getLogger(__name__)


def induced_matrix(graph: ManipulationGraph, cls: HypothesisClass) -> np.ndarray:
    """|H| x n matrix of induced labels h̄_G(x)."""
    return np.array([induced_labeling(graph, h) for h in cls], dtype=np.uint8)


def empirical_losses(
    graph: ManipulationGraph, cls: HypothesisClass, sample: Sequence[Agent]
) -> np.ndarray:
    """Mistake counts of every member of cls on the sample."""
    if not sample:
        raise ValidationError("Empirical loss needs a non-empty sample")
    for agent in sample:
        check_vertex(agent.x, graph.n)
    xs = np.array([agent.x for agent in sample])
    ys = np.array([agent.y for agent in sample], dtype=np.uint8)
    return (induced_matrix(graph, cls)[:, xs] != ys).sum(axis=1)


def erm_index(
    graph: ManipulationGraph, cls: HypothesisClass, sample: Sequence[Agent]
) -> int:
    """Smallest index attaining the minimum empirical strategic loss."""
    return int(np.argmin(empirical_losses(graph, cls, sample)))


def erm_strategic(
    graph: ManipulationGraph, cls: HypothesisClass, sample: Sequence[Agent]
) -> Hypothesis:
    index = erm_index(graph, cls, sample)
    logger.debug("ERM picked hypothesis %d of %d", index, len(cls))
    return cls[index]
