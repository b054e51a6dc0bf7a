"""Deterministic generators for the equality and lower-bound fixtures.

Vertex naming is fixed so transcripts stay auditable: in the hub-and-leaf
families vertex x_{i,j} of copy c sits at flat index (c·b + i)·(k+1) + j,
where b is the number of blocks per copy.
"""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction

import config

from ..exceptions import ResourceBudgetError, ValidationError
from ..graphs import GraphClass, ManipulationGraph, VertexId
from ..hypotheses import Agent, FiniteDistribution, Hypothesis, HypothesisClass
from .models import ColumnChoiceGraphClass, Fixture

logger = logging.getLogger(__name__)


def _check_budget(n: int, name: str) -> None:
    if n > config.MAX_UNIVERSE:
        raise ResourceBudgetError(
            f"{name} needs {n} vertices, budget is {config.MAX_UNIVERSE}",
            reached=n,
        )


def _hub_and_leaves(
    blocks: int, k: int, copies: int
) -> tuple[ManipulationGraph, tuple[str, ...]]:
    """`copies·blocks` stars, hub x_{i,0} pointing at leaves x_{i,1..k}."""
    width = k + 1
    n = copies * blocks * width
    arcs: list[tuple[VertexId, VertexId]] = []
    names: list[str] = []
    for c in range(copies):
        for i in range(blocks):
            base = (c * blocks + i) * width
            arcs.extend((base, base + j) for j in range(1, width))
            prefix = f"x[{c}]" if copies > 1 else "x"
            names.extend(f"{prefix}_{{{i},{j}}}" for j in range(width))
    return ManipulationGraph.from_arcs(n, arcs, k), tuple(names)


def binary_rep_construction(d: int, k: int) -> Fixture:
    """d copies of log2(k) stars whose leaves spell out a binary code.

    Hypothesis h_j (j = 1..k) labels leaf x_{i,j} with bit i of j-1; the
    class is the d-fold product, so |H| = k^d.
    """
    if d < 1:
        raise ValidationError("d must be positive")
    if k < 2 or k & (k - 1):
        raise ValidationError(f"k must be a power of two ≥ 2, got {k}")
    bits = int(math.log2(k))
    width = k + 1
    _check_budget(d * bits * width, "binary_rep_construction")
    graph, names = _hub_and_leaves(bits, k, d)

    members: list[Hypothesis] = []
    for codes in itertools.product(range(1, k + 1), repeat=d):
        positives = [
            (c * bits + i) * width + j
            for c, j in enumerate(codes)
            for i in range(bits)
            if ((j - 1) >> i) & 1
        ]
        members.append(Hypothesis.from_positive(graph.n, positives))
    logger.debug("binary_rep(d=%d, k=%d): %d vertices", d, k, graph.n)
    return Fixture(
        name="binrep",
        cls=HypothesisClass(tuple(members)),
        vertex_names=names,
        graph=graph,
        target=0,
        params={"d": d, "k": k},
    )


def binary_rep_hubs(d: int, k: int) -> tuple[VertexId, ...]:
    """The d·log2(k) hub vertices the induced class shatters."""
    bits = int(math.log2(k))
    return tuple(block * (k + 1) for block in range(d * bits))


def star_singletons(d: int, k: int) -> Fixture:
    """d stars; each hypothesis selects exactly one positive leaf per star."""
    if d < 1 or k < 1:
        raise ValidationError("d and k must be positive")
    width = k + 1
    _check_budget(d * width, "star_singletons")
    graph, names = _hub_and_leaves(1, k, d)
    members = tuple(
        Hypothesis.from_positive(graph.n, (c * width + j for c, j in enumerate(leaves)))
        for leaves in itertools.product(range(1, width), repeat=d)
    )
    return Fixture(
        name="star",
        cls=HypothesisClass(members),
        vertex_names=names,
        graph=graph,
        target=0,
        params={"d": d, "k": k},
    )


def _block_class(
    n: int, blocks: list[list[VertexId]]
) -> HypothesisClass:
    return HypothesisClass(
        tuple(Hypothesis.from_positive(n, block) for block in blocks)
    )


def ug_pac_lb_construction(n: int, i_star: int = 1) -> Fixture:
    """One node o plus blocks X_0..X_n of n nodes each.

    H = {1{X_i} : i = 1..n}. Candidate graphs connect each x_{0j} to at most
    one of x_{1j}..x_{nj}; the designated graph uses x_{0j} → x_{i⋆ j}.
    """
    if n < 2:
        raise ValidationError("n must be at least 2")
    if not 1 <= i_star <= n:
        raise ValidationError(f"i_star must be in [1, {n}], got {i_star}")
    size = 1 + n * (n + 1)
    _check_budget(size, "ug_pac_lb_construction")

    def index(i: int, j: int) -> VertexId:
        return 1 + i * n + (j - 1)

    names = ["o"] + [f"x_{{{i},{j}}}" for i in range(n + 1) for j in range(1, n + 1)]
    graphs = ColumnChoiceGraphClass(
        n=size,
        sources=tuple(index(0, j) for j in range(1, n + 1)),
        candidates=tuple(
            tuple(index(i, j) for i in range(1, n + 1)) for j in range(1, n + 1)
        ),
    )
    cls = _block_class(
        size,
        [[index(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)],
    )
    target_graph = graphs.index_of(graphs.graph_for([i_star] * n))
    return Fixture(
        name="ug-pac-lb",
        cls=cls,
        vertex_names=tuple(names),
        graph_class=graphs,
        target=i_star - 1,
        target_graph=target_graph,
        params={"n": n, "i_star": i_star},
    )


def ug_pac_lb_distribution(fixture: Fixture, epsilon: Fraction) -> FiniteDistribution:
    """Mass 1-2ε on o labeled 0, 2ε spread uniformly over X_0 labeled 1."""
    n = fixture.params["n"]
    if not 0 < 2 * epsilon <= 1:
        raise ValidationError(f"epsilon must lie in (0, 1/2], got {epsilon}")
    share = 2 * epsilon / n
    weights: dict[Agent, Fraction] = {Agent(0, 0): 1 - 2 * epsilon}
    for j in range(1, n + 1):
        weights[Agent(j, 1)] = share
    return FiniteDistribution.from_mapping(
        {agent: p for agent, p in weights.items() if p}
    )


def ug_online_lb_construction(n: int) -> Fixture:
    """Blocks X_0..X_n with one fresh column per round.

    Column t holds x_{0t}, x_{1t}, ..., x_{nt}; candidate graphs add at most
    one arc x_{0t} → x_{it} per column, so |G| = (n+1)^n.
    """
    if n < 2:
        raise ValidationError("n must be at least 2")
    size = n * (n + 1)
    _check_budget(size, "ug_online_lb_construction")

    def index(i: int, t: int) -> VertexId:
        return i * n + (t - 1)

    names = tuple(f"x_{{{i},{t}}}" for i in range(n + 1) for t in range(1, n + 1))
    graphs = ColumnChoiceGraphClass(
        n=size,
        sources=tuple(index(0, t) for t in range(1, n + 1)),
        candidates=tuple(
            tuple(index(i, t) for i in range(1, n + 1)) for t in range(1, n + 1)
        ),
    )
    cls = _block_class(
        size,
        [[index(i, t) for t in range(1, n + 1)] for i in range(1, n + 1)],
    )
    return Fixture(
        name="ug-online-lb",
        cls=cls,
        vertex_names=names,
        graph_class=graphs,
        target=0,
        target_graph=graphs.index_of(graphs.graph_for([1] * n)),
        params={"n": n},
    )


def chain_construction(n: int) -> Fixture:
    """Vertices A, B, C_1..C_n; graphs A → B → C_i; singletons over the C_i."""
    if n < 2:
        raise ValidationError("n must be at least 2")
    size = n + 2
    graphs = GraphClass(
        tuple(
            ManipulationGraph.from_arcs(size, [(0, 1), (1, 1 + i)], 1)
            for i in range(1, n + 1)
        )
    )
    return Fixture(
        name="chain",
        cls=HypothesisClass.singletons(size, range(2, size)),
        vertex_names=("A", "B", *(f"C_{i}" for i in range(1, n + 1))),
        graph_class=graphs,
        target=0,
        target_graph=0,
        params={"n": n},
    )
