"""PAC learners for an unknown manipulation graph from a finite candidate class.

Observations come from the all-but-x probe, so v_t is a uniformly random
out-neighbor of x_t in the true graph (or x_t itself when it has none).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

import config

from ..constructions.models import AnyGraphClass
from ..exceptions import RealizabilityViolationError, ValidationError
from ..graphs import ManipulationGraph
from ..hypotheses import FiniteDistribution, Hypothesis, HypothesisClass
from ..strategic import population_strategic_loss
from .erm import empirical_losses, erm_index
from .models import GraphHypothesisPair, LabeledObservation

logger = logging.getLogger(__name__)


def _require(observations: Sequence[LabeledObservation], what: str) -> None:
    if not observations:
        raise ValidationError(f"{what} needs a non-empty sample")


def explains_moves(
    graph: ManipulationGraph, observations: Sequence[LabeledObservation]
) -> bool:
    """Every observed move x_t → v_t is an arc of graph; stays are not checked."""
    return all(graph.has_arc(o.x, o.v) for o in observations if o.moved)


def empirical_degree(
    graph: ManipulationGraph, observations: Sequence[LabeledObservation]
) -> int:
    return sum(graph.out_degree(o.x) for o in observations)


def ug_realizable(
    graph_class: AnyGraphClass,
    cls: HypothesisClass,
    observations: Sequence[LabeledObservation],
) -> GraphHypothesisPair:
    """Consistent (G, h) with the smallest empirical degree Σ|N_G(x_t)|.

    Consistent means G explains every observed move and some h has zero
    empirical strategic loss under G. Ties go to the smallest graph index,
    then the smallest hypothesis index.
    """
    _require(observations, "ug_realizable")
    agents = [o.agent for o in observations]
    candidates = sorted(
        (empirical_degree(graph, observations), index)
        for index, graph in enumerate(graph_class)
        if explains_moves(graph, observations)
    )
    for degree, index in candidates:
        losses = empirical_losses(graph_class[index], cls, agents)
        zero = np.flatnonzero(losses == 0)
        if zero.size:
            logger.debug(
                "ug_realizable: graph %d (degree %d) of %d explaining candidates",
                index,
                degree,
                len(candidates),
            )
            return GraphHypothesisPair(index, int(zero[0]), degree)
    raise RealizabilityViolationError(
        "No (graph, hypothesis) pair is consistent with the observations"
    )


def empirical_proxy_loss(
    graph: ManipulationGraph,
    observations: Sequence[LabeledObservation],
    k_bound: int,
) -> Fraction:
    """(2/T)·#{unexplained moves} + (1/(kT))·Σ|N_G(x_t)|.

    The true-graph term of the population proxy is constant in G and left out.
    """
    _require(observations, "empirical_proxy_loss")
    k = max(k_bound, 1)
    total = len(observations)
    missed = sum(1 for o in observations if o.moved and not graph.has_arc(o.x, o.v))
    return Fraction(2 * missed, total) + Fraction(
        empirical_degree(graph, observations), k * total
    )


def split_ratio(k_bound: int) -> int:
    """S1:S2 proportion k²:1, capped."""
    return min(max(k_bound, 1) ** 2, config.MAX_SPLIT_RATIO)


def split_sample(
    observations: Sequence[LabeledObservation], k_bound: int
) -> tuple[list[LabeledObservation], list[LabeledObservation]]:
    """Split in order into a graph-fitting S1 and a hypothesis-fitting S2."""
    if len(observations) < 2:
        raise ValidationError("Splitting needs at least two observations")
    ratio = split_ratio(k_bound)
    cut = min(len(observations) - 1, max(1, len(observations) * ratio // (ratio + 1)))
    return list(observations[:cut]), list(observations[cut:])


def ug_agnostic(
    graph_class: AnyGraphClass,
    cls: HypothesisClass,
    s1: Sequence[LabeledObservation],
    s2: Sequence[LabeledObservation],
    k_bound: int,
) -> GraphHypothesisPair:
    """Ĝ minimizes the empirical proxy loss on S1; ĥ is the strategic ERM on S2 under Ĝ."""
    _require(s1, "Graph fitting")
    _require(s2, "Hypothesis fitting")
    best_index = 0
    best_loss: Fraction | None = None
    for index, graph in enumerate(graph_class):
        loss = empirical_proxy_loss(graph, s1, k_bound)
        if best_loss is None or loss < best_loss:
            best_index, best_loss = index, loss
    graph = graph_class[best_index]
    h_index = erm_index(graph, cls, [o.agent for o in s2])
    logger.debug("ug_agnostic: graph %d with proxy %s", best_index, best_loss)
    return GraphHypothesisPair(best_index, h_index, empirical_degree(graph, s1))


def exact_neighborhood_loss(
    graph: ManipulationGraph, graph_star: ManipulationGraph, dist: FiniteDistribution
) -> Fraction:
    """P_x(N_G(x) ≠ N_{G⋆}(x)) under the feature marginal."""
    return sum(
        (
            p
            for x, p in dist.marginal().items()
            if graph.neighbor_set(x) != graph_star.neighbor_set(x)
        ),
        Fraction(0),
    )


def exact_proxy_loss(
    graph: ManipulationGraph,
    graph_star: ManipulationGraph,
    dist: FiniteDistribution,
    k_bound: int,
) -> Fraction:
    """2·P(v ∉ N_G(x)) + (1/k)·E|N_G(x)| − (1/k)·E|N_{G⋆}(x)|, v ~ Unif N_{G⋆}(x).

    Features without out-neighbors in G⋆ contribute nothing to the first term.
    """
    k = max(k_bound, 1)
    total = Fraction(0)
    for x, p in dist.marginal().items():
        true = graph_star.neighbor_set(x)
        guess = graph.neighbor_set(x)
        missed = Fraction(len(true - guess), len(true)) if true else Fraction(0)
        total += p * (2 * missed + Fraction(len(guess) - len(true), k))
    return total


def strategic_loss_decomposition(
    graph: ManipulationGraph,
    graph_star: ManipulationGraph,
    h: Hypothesis,
    dist: FiniteDistribution,
) -> tuple[Fraction, Fraction, Fraction]:
    """(L^str_{G⋆}(h), L_nb(G), L^str_G(h)); the first never exceeds the sum of the others."""
    return (
        population_strategic_loss(graph_star, h, dist),
        exact_neighborhood_loss(graph, graph_star, dist),
        population_strategic_loss(graph, h, dist),
    )
