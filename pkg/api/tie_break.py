"""Tie-breaking rules for agents choosing among positive neighbors.

A rule is an immutable description; `breaker()` opens the per-run state that
actually makes choices, so rules can be shared between threads while random
and scripted choices stay confined to one run.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Protocol, override

import numpy as np

from .exceptions import TieBreakError
from .graphs import VertexId


class TieBreaker(Protocol):
    def choose(self, options: Sequence[VertexId]) -> VertexId:
        """Pick one vertex from a non-empty ascending tie set."""
        ...


class TieBreakRule(Protocol):
    @property
    def name(self) -> str: ...

    def breaker(self) -> TieBreaker: ...


@dataclass(frozen=True, slots=True)
class LexMin:
    """Smallest index wins. Stateless, so the rule is its own breaker."""

    @property
    def name(self) -> str:
        return "lexmin"

    def breaker(self) -> TieBreaker:
        return self

    def choose(self, options: Sequence[VertexId]) -> VertexId:
        return options[0]


@dataclass(frozen=True, slots=True)
class UniformRandom:
    seed: int

    @property
    def name(self) -> str:
        return f"uniform:{self.seed}"

    def breaker(self) -> TieBreaker:
        return _RandomBreaker(np.random.default_rng(self.seed))


@dataclass(frozen=True, slots=True)
class Scripted:
    """Choice indices into the ascending tie set, consumed in order."""

    choices: tuple[int, ...]

    @property
    def name(self) -> str:
        return "scripted"

    def breaker(self) -> TieBreaker:
        return _ScriptedBreaker(iter(self.choices))


class _RandomBreaker:
    def __init__(self, rng: np.random.Generator) -> None:
        self._rng = rng

    def choose(self, options: Sequence[VertexId]) -> VertexId:
        return options[int(self._rng.integers(len(options)))]


class _ScriptedBreaker:
    def __init__(self, script: Iterator[int]) -> None:
        self._script = script
        self._used = 0

    def choose(self, options: Sequence[VertexId]) -> VertexId:
        try:
            index = next(self._script)
        except StopIteration:
            raise TieBreakError(
                f"Tie-break script exhausted after {self._used} choices"
            ) from None
        self._used += 1
        if not 0 <= index < len(options):
            raise TieBreakError(
                f"Scripted choice {index} outside tie set of size {len(options)}"
            )
        return options[index]

    @override
    def __repr__(self) -> str:
        return f"_ScriptedBreaker(used={self._used})"


LEX_MIN = LexMin()


def parse_rule(spec: str) -> TieBreakRule:
    """Parse `lexmin`, `uniform:<seed>` or `scripted:<i>,<j>,...`."""
    name, _, arg = spec.partition(":")
    match name:
        case "lexmin":
            return LEX_MIN
        case "uniform":
            return UniformRandom(int(arg or 0))
        case "scripted":
            return Scripted(tuple(int(c) for c in arg.split(",") if c))
        case _:
            raise TieBreakError(f"Unknown tie-break rule {spec!r}")
