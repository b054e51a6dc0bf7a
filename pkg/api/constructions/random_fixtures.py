"""Seeded random fixtures for property suites and the experiment matrix."""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

import config

from ..exceptions import ResourceBudgetError, ValidationError
from ..graphs import GraphClass, ManipulationGraph, VertexId
from ..hypotheses import Agent, FiniteDistribution, Hypothesis, HypothesisClass
from ..strategic import induced_labeling
from .models import Fixture

logger = logging.getLogger(__name__)


def random_graph(
    n: int, k: int, rng: np.random.Generator, density: float = 0.5
) -> ManipulationGraph:
    """Each vertex independently gets 0..k distinct random out-neighbors."""
    rows: list[tuple[VertexId, ...]] = []
    for x in range(n):
        others = [y for y in range(n) if y != x]
        degree = int(rng.binomial(min(k, len(others)), density)) if others else 0
        picks = rng.choice(others, size=degree, replace=False) if degree else []
        rows.append(tuple(sorted(int(y) for y in picks)))
    return ManipulationGraph.from_rows(rows, k)


def random_class(n: int, size: int, rng: np.random.Generator) -> HypothesisClass:
    if size > 1 << n:
        raise ValidationError(f"Cannot draw {size} distinct labelings of {n} vertices")
    masks: dict[int, None] = {}
    while len(masks) < size:
        masks.setdefault(int(rng.integers(1 << n)), None)
    return HypothesisClass(
        tuple(Hypothesis(tuple((m >> x) & 1 for x in range(n))) for m in masks)
    )


def random_fixture(
    n: int, k: int, class_size: int, seed: int, density: float = 0.5
) -> Fixture:
    """A (graph, class, target) triple; the target index is uniform."""
    if n < 1 or k < 0 or class_size < 1:
        raise ValidationError("n and class_size must be positive, k non-negative")
    if n > config.MAX_UNIVERSE:
        raise ResourceBudgetError(
            f"Random fixture of {n} vertices exceeds budget", reached=n
        )
    rng = np.random.default_rng(seed)
    graph = random_graph(n, k, rng, density)
    cls = random_class(n, class_size, rng)
    return Fixture(
        name="random",
        cls=cls,
        vertex_names=tuple(f"v{x}" for x in range(n)),
        graph=graph,
        target=int(rng.integers(class_size)),
        params={"n": n, "k": k, "class_size": class_size, "seed": seed},
    )


def superset_decoy(
    graph: ManipulationGraph, rng: np.random.Generator
) -> ManipulationGraph | None:
    """The graph plus one extra arc, or None when every vertex is saturated."""
    open_slots = [
        (x, y)
        for x in range(graph.n)
        if graph.out_degree(x) < graph.declared_k
        for y in range(graph.n)
        if y != x and not graph.has_arc(x, y)
    ]
    if not open_slots:
        return None
    x, y = open_slots[int(rng.integers(len(open_slots)))]
    return graph.with_arcs([(x, y)])


def random_graph_class(
    target: ManipulationGraph,
    count: int,
    seed: int,
    *,
    include_superset: bool = True,
) -> tuple[GraphClass, int]:
    """A shuffled class of `count` distinct graphs containing `target`.

    Returns the class and the index of the target in it. One decoy is a
    strict superset of the target when room for an extra arc exists.
    """
    if count < 1:
        raise ValidationError("Graph class needs at least one member")
    rng = np.random.default_rng(seed)
    members: dict[ManipulationGraph, None] = {target: None}
    if include_superset and count > 1:
        decoy = superset_decoy(target, rng)
        if decoy is not None:
            members.setdefault(decoy, None)
    attempts = 0
    while len(members) < count:
        attempts += 1
        if attempts > 100 * count:
            raise ValidationError(
                f"Could not draw {count} distinct graphs on {target.n} vertices"
            )
        members.setdefault(random_graph(target.n, target.declared_k, rng), None)
    order = rng.permutation(len(members))
    listed = list(members)
    shuffled = tuple(listed[int(i)] for i in order)
    logger.debug("random_graph_class: %d graphs", len(shuffled))
    return GraphClass(shuffled), shuffled.index(target)


def realizable_distribution(
    graph: ManipulationGraph,
    h: Hypothesis,
    seed: int,
    support_size: int | None = None,
) -> FiniteDistribution:
    """Agents labeled by h's induced labeling, random integer weights."""
    rng = np.random.default_rng(seed)
    size = graph.n if support_size is None else min(support_size, graph.n)
    vertices = sorted(int(x) for x in rng.choice(graph.n, size=size, replace=False))
    bar = induced_labeling(graph, h)
    raw = [int(w) for w in rng.integers(1, 10, size=size)]
    total = sum(raw)
    return FiniteDistribution(
        tuple(
            (Agent(x, bar[x]), Fraction(w, total))
            for x, w in zip(vertices, raw, strict=True)
        )
    )


def corrupt_distribution(
    dist: FiniteDistribution, flip_mass: Fraction, seed: int
) -> FiniteDistribution:
    """Move `flip_mass` of probability onto label-flipped copies of agents.

    Mass is taken from the agents in a seeded order, so the exact optimal
    loss of the corrupted distribution is at most `flip_mass`.
    """
    if not 0 <= flip_mass <= 1:
        raise ValidationError(f"flip_mass must lie in [0, 1], got {flip_mass}")
    rng = np.random.default_rng(seed)
    weights = dict(dist.support)
    remaining = flip_mass
    for i in rng.permutation(len(dist.support)):
        if not remaining:
            break
        agent, p = dist.support[int(i)]
        moved = min(p, remaining)
        weights[agent] -= moved
        flipped = Agent(agent.x, 1 - agent.y)
        weights[flipped] = weights.get(flipped, Fraction(0)) + moved
        remaining -= moved
    return FiniteDistribution.from_mapping(
        {agent: p for agent, p in weights.items() if p}
    )
