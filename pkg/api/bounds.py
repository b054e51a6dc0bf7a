"""Exact mistake/regret ceilings and forced-mistake floors."""

import math


def fi_ceiling(m: int, k: int) -> int:
    """Fully informative reduction: ⌊4·M·ln(2(k+1))⌋."""
    return math.floor(4 * m * math.log(2 * (k + 1)))


def pmf_ceiling(m: int, k: int) -> int:
    """Post-manipulation reduction: ⌊4·k·M·ln(2(k+1))⌋ (k floored at 1)."""
    return math.floor(4 * max(k, 1) * m * math.log(2 * (k + 1)))


def ug_ceiling(m: int, k: int, graph_count: int) -> int:
    """Unknown-graph learner: ⌈log2|G|⌉ + ⌊8·k·M·ln(2(2k+1))⌋."""
    return math.ceil(math.log2(graph_count)) + pmf_ceiling(m, 2 * k)


def hedge_regret_ceiling(horizon: int, experts: int) -> float:
    """sqrt(T·ln N / 2) for Hedge with η = sqrt(8 ln N / T)."""
    if experts <= 1:
        return 0.0
    return math.sqrt(horizon * math.log(experts) / 2)


def hedge_learning_rate(horizon: int, experts: int) -> float:
    if experts <= 1:
        return 0.0
    return math.sqrt(8 * math.log(experts) / horizon)


def binrep_floor(d: int, k: int) -> int:
    return d * int(math.log2(k))


def star_floor(d: int, k: int) -> int:
    return d * (k - 1)


def graph_class_floor(n: int) -> int:
    return n - 1
