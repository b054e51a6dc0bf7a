"""Probe-based sample collection for the batch learners."""

from __future__ import annotations

import logging
from enum import StrEnum

import numpy as np

from ..exceptions import ValidationError
from ..graphs import ManipulationGraph
from ..hypotheses import FiniteDistribution, Hypothesis
from ..pac.models import LabeledObservation
from ..strategic import best_response
from ..tie_break import UniformRandom

logger = logging.getLogger(__name__)


class Probe(StrEnum):
    BUT_X = "but-x"
    """h_t = 1{x ≠ x_t}: the agent reveals one of its out-neighbors."""
    ALL_POSITIVE = "all-positive"
    """h_t = 1{X}: nobody moves, so v_t = x_t."""


def collect_pac_sample(
    graph: ManipulationGraph,
    dist: FiniteDistribution,
    rounds: int,
    probe: Probe | str = Probe.BUT_X,
    seed: int = 0,
) -> list[LabeledObservation]:
    """Draw `rounds` agents and record where each one ends up under the probe.

    Ties among out-neighbors are broken uniformly at random, seeded by `seed`.
    """
    probe = Probe(probe)
    if rounds < 0:
        raise ValidationError("Sample size must be non-negative")
    if any(agent.x >= graph.n for agent in dist.agents):
        raise ValidationError("Distribution support lies outside the graph universe")
    rng = np.random.default_rng(seed)
    breaker = UniformRandom(seed + 1).breaker()
    everyone = Hypothesis.all_positive(graph.n)
    sample: list[LabeledObservation] = []
    for agent in dist.sample(rng, rounds):
        if probe is Probe.BUT_X:
            h = Hypothesis(tuple(int(u != agent.x) for u in range(graph.n)))
        else:
            h = everyone
        v = best_response(graph, h, agent.x, breaker)
        sample.append(LabeledObservation(agent.x, v, agent.y))
    logger.debug("Collected %d %s observations", len(sample), probe.value)
    return sample
