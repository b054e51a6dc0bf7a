"""Brute-force VC and Littlestone dimension oracles and the induced class.

Classes are handled as bitmasks over their members: for each vertex the
column mask holds the members labeling it 1, so restricting a version space
to h(x)=b is a single AND.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

import config

from .exceptions import ResourceBudgetError, ValidationError
from .graphs import ManipulationGraph
from .hypotheses import Hypothesis, HypothesisClass
from .strategic import induced_labeling

logger = logging.getLogger(__name__)

type Labeling = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class InducedClass:
    """Deduplicated induced labelings x ↦ h̄_G(x), in first-seen order."""

    members: tuple[Labeling, ...]
    sources: tuple[int, ...]
    """Index in the base class of the first hypothesis producing each member."""

    def __len__(self) -> int:
        return len(self.members)

    def as_hypothesis_class(self) -> HypothesisClass:
        return HypothesisClass(tuple(Hypothesis(m) for m in self.members))


def induce_class(graph: ManipulationGraph, cls: HypothesisClass) -> InducedClass:
    if graph.n != cls.n:
        raise ValidationError(
            f"Graph universe {graph.n} does not match class universe {cls.n}"
        )
    seen: dict[Labeling, int] = {}
    for index, h in enumerate(cls):
        seen.setdefault(induced_labeling(graph, h), index)
    return InducedClass(tuple(seen), tuple(seen.values()))


def _as_labelings(
    cls: HypothesisClass | InducedClass | Iterable[Sequence[int]],
) -> list[Labeling]:
    match cls:
        case HypothesisClass():
            rows = [h.labels for h in cls]
        case InducedClass():
            rows = list(cls.members)
        case _:
            rows = [tuple(row) for row in cls]
    unique = list(dict.fromkeys(rows))
    if not unique:
        raise ValidationError("Dimension oracles need a non-empty class")
    n = len(unique[0])
    if any(len(row) != n for row in unique):
        raise ValidationError("Class members must share one universe")
    if n > config.MAX_UNIVERSE:
        raise ResourceBudgetError(
            f"Universe of {n} vertices exceeds budget {config.MAX_UNIVERSE}",
            reached=n,
        )
    if len(unique) > config.MAX_CLASS_SIZE:
        raise ResourceBudgetError(
            f"Class of {len(unique)} labelings exceeds budget "
            f"{config.MAX_CLASS_SIZE}",
            reached=len(unique),
        )
    return unique


def vc_dimension(cls: HypothesisClass | InducedClass | Iterable[Sequence[int]]) -> int:
    """Largest shattered vertex subset, grown one level at a time.

    Only shattered sets are extended (every subset of a shattered set is
    shattered), and there are at most |H| of them.
    """
    rows = _as_labelings(cls)
    matrix = np.array(rows, dtype=np.int64)
    m, n = matrix.shape
    # Level 0: the empty set, with every member projecting to code 0.
    level: list[tuple[int, np.ndarray]] = [(-1, np.zeros(m, dtype=np.int64))]
    size = 0
    while level and (1 << (size + 1)) <= m:
        nxt: list[tuple[int, np.ndarray]] = []
        target = 1 << (size + 1)
        for last, codes in level:
            for v in range(last + 1, n):
                extended = codes * 2 + matrix[:, v]
                if np.unique(extended).size == target:
                    nxt.append((v, extended))
        if not nxt:
            break
        level = nxt
        size += 1
        logger.debug("vc_dimension: %d shattered sets of size %d", len(level), size)
    return size


class LittlestoneOracle:
    """Memoized Ldim over sub-classes of one fixed finite class.

    Sub-classes are bitmasks over the member list; Ldim of the empty
    sub-class is -1 so SOA comparisons stay well-defined.
    """

    __slots__ = ("_columns", "_full", "_memo", "_vertex_columns", "size")

    def __init__(self, rows: Sequence[Labeling]) -> None:
        self.size = len(rows)
        n = len(rows[0])
        columns: list[int] = []
        for x in range(n):
            mask = 0
            for i, row in enumerate(rows):
                if row[x]:
                    mask |= 1 << i
            columns.append(mask)
        self._vertex_columns = tuple(columns)
        self._full = (1 << self.size) - 1
        # Identical columns split every version space the same way.
        self._columns = tuple(dict.fromkeys(c for c in columns if 0 < c < self._full))
        self._memo: dict[int, int] = {}

    @classmethod
    def for_class(
        cls, hypotheses: HypothesisClass | InducedClass | Iterable[Sequence[int]]
    ) -> LittlestoneOracle:
        """Oracle over a budget-checked class, members in their given order."""
        return cls(_as_labelings(hypotheses))

    @property
    def full(self) -> int:
        return self._full

    def column(self, x: int) -> int:
        """Members labeling vertex x positive."""
        return self._vertex_columns[x]

    def ldim(self, space: int) -> int:
        count = space.bit_count()
        if count <= 1:
            return count - 1 if count == 0 else 0
        cached = self._memo.get(space)
        if cached is not None:
            return cached
        ceiling = count.bit_length() - 1
        best = 0
        seen: set[int] = set()
        for column in self._columns:
            ones = space & column
            if not ones or ones == space or ones in seen:
                continue
            seen.add(ones)
            zeros = space & ~column
            small, large = sorted((ones, zeros), key=int.bit_count)
            if small.bit_count().bit_length() <= best:
                continue
            first = self.ldim(small)
            if first + 1 <= best:
                continue
            value = 1 + min(first, self.ldim(large))
            if value > best:
                best = value
                if best == ceiling:
                    break
        self._memo[space] = best
        return best


def littlestone_dimension(
    cls: HypothesisClass | InducedClass | Iterable[Sequence[int]],
) -> int:
    oracle = LittlestoneOracle.for_class(cls)
    return oracle.ldim(oracle.full)


@dataclass(frozen=True, slots=True)
class VcBoundReport:
    d: int
    k: int
    d_bar: int
    bound: int
    holds: bool
    near_bound: bool
    """Within one of the bound; flagged for inspection, not a failure."""
    sauer_bound: int
    """Largest m with 2^m ≤ Σ_{i≤d} C(m(k+1), i); never exceeded."""


def vc_upper_bound(d: int, k: int) -> int:
    """Ceil-form of d·log2(kd), never below 1.

    This is the asymptotic bound without its constant, so small classes can
    exceed it; `sauer_upper_bound` is the exact one.
    """
    return max(1, math.ceil(d * math.log2(max(2, k * d))))


def sauer_upper_bound(d: int, k: int, n: int) -> int:
    """Largest m ≤ n whose 2^m labelings fit the Sauer count on m(k+1) points.

    The induced labels of m features depend only on their closed
    neighborhoods, which cover at most m(k+1) vertices.
    """
    best = 0
    for m in range(1, n + 1):
        points = m * (k + 1)
        if 1 << m <= sum(math.comb(points, i) for i in range(d + 1)):
            best = m
    return best


def verify_vcd_upper(graph: ManipulationGraph, cls: HypothesisClass) -> VcBoundReport:
    d = vc_dimension(cls)
    k = graph.max_out_degree
    d_bar = vc_dimension(induce_class(graph, cls))
    bound = vc_upper_bound(d, k)
    report = VcBoundReport(
        d=d,
        k=k,
        d_bar=d_bar,
        bound=bound,
        holds=d_bar <= bound,
        near_bound=bound - 1 <= d_bar <= bound,
        sauer_bound=sauer_upper_bound(d, k, graph.n),
    )
    if not report.holds:
        logger.warning("Ceil-form VC bound exceeded: %s", report)
    if d_bar > report.sauer_bound:
        logger.error("Sauer bound exceeded, oracle inconsistent: %s", report)
    return report
