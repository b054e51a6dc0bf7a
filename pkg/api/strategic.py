"""Agent best response, induced labels and strategic losses."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

import numpy as np

import config

from .exceptions import ValidationError
from .graphs import ManipulationGraph, VertexId, check_vertex
from .hypotheses import Agent, FiniteDistribution, Hypothesis
from .tie_break import LEX_MIN, TieBreaker


def _check_universe(graph: ManipulationGraph, h: Hypothesis) -> None:
    if graph.n != h.n:
        raise ValidationError(
            f"Graph universe {graph.n} does not match hypothesis universe {h.n}"
        )


def _check_agents(graph: ManipulationGraph, agents: Iterable[Agent]) -> None:
    for agent in agents:
        check_vertex(agent.x, graph.n)


def positive_neighbors(
    graph: ManipulationGraph, h: Hypothesis, x: VertexId
) -> tuple[VertexId, ...]:
    """N(x) ∩ X_{h,+}, ascending."""
    return tuple(y for y in graph.neighbors(x) if h.labels[y])


def best_response(
    graph: ManipulationGraph,
    h: Hypothesis,
    x: VertexId,
    rule: TieBreaker = LEX_MIN,
) -> VertexId:
    """Where the agent at x ends up when h is implemented."""
    _check_universe(graph, h)
    check_vertex(x, graph.n)
    if h.labels[x]:
        return x
    options = positive_neighbors(graph, h, x)
    if not options:
        return x
    return rule.choose(options)


def induced_label(
    graph: ManipulationGraph,
    h: Hypothesis,
    x: VertexId,
    rule: TieBreaker = LEX_MIN,
) -> int:
    return h.labels[best_response(graph, h, x, rule)]


def induced_labeling(graph: ManipulationGraph, h: Hypothesis) -> tuple[int, ...]:
    """x ↦ h̄_G(x) for every vertex; tie-breaking never changes it."""
    _check_universe(graph, h)
    return tuple(
        1 if h.labels[x] or any(h.labels[y] for y in graph.neighbors(x)) else 0
        for x in range(graph.n)
    )


def strategic_loss(
    graph: ManipulationGraph,
    h: Hypothesis,
    agent: Agent,
    rule: TieBreaker = LEX_MIN,
) -> int:
    return int(induced_label(graph, h, agent.x, rule) != agent.y)


def empirical_strategic_loss(
    graph: ManipulationGraph,
    h: Hypothesis,
    sample: Sequence[Agent],
    rule: TieBreaker = LEX_MIN,
) -> Fraction:
    if not sample:
        raise ValidationError("Empirical loss needs a non-empty sample")
    errors = sum(strategic_loss(graph, h, agent, rule) for agent in sample)
    return Fraction(errors, len(sample))


def population_strategic_loss(
    graph: ManipulationGraph,
    h: Hypothesis,
    dist: FiniteDistribution,
) -> Fraction:
    """Exact expectation of the strategic loss over a finite support.

    The loss is the same for every tie-breaking rule, so no rule is taken.
    """
    bar = induced_labeling(graph, h)
    _check_agents(graph, dist.agents)
    return sum(
        (p for agent, p in dist if bar[agent.x] != agent.y),
        Fraction(0),
    )


def sampled_strategic_loss(
    graph: ManipulationGraph,
    h: Hypothesis,
    dist: FiniteDistribution,
    seed: int,
    draws: int = config.MONTE_CARLO_DRAWS,
) -> float:
    """Monte Carlo estimate of the population loss from `draws` agents."""
    if draws < 1:
        raise ValidationError("draws must be positive")
    _check_agents(graph, dist.agents)
    bar = np.array(induced_labeling(graph, h), dtype=np.uint8)
    agents = dist.sample(np.random.default_rng(seed), draws)
    xs = np.array([agent.x for agent in agents])
    ys = np.array([agent.y for agent in agents], dtype=np.uint8)
    return float((bar[xs] != ys).mean())


def cumulative_strategic_loss(
    graph: ManipulationGraph, h: Hypothesis, agents: Iterable[Agent]
) -> int:
    bar = induced_labeling(graph, h)
    agents = list(agents)
    _check_agents(graph, agents)
    return sum(1 for agent in agents if bar[agent.x] != agent.y)


def mixture_strategic_loss(
    graph: ManipulationGraph,
    mixture: Sequence[tuple[Hypothesis, float]],
    agent: Agent,
) -> float:
    """Loss of a randomized learner: each realization induces its own move."""
    total = sum(p for _, p in mixture)
    if total <= 0:
        raise ValidationError("Mixture weights must have positive mass")
    return sum(p * strategic_loss(graph, h, agent) for h, p in mixture) / total
