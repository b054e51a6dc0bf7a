"""Hypotheses, hypothesis classes, agents and finite-support distributions."""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Self

import numpy as np

from .exceptions import ValidationError
from .graphs import VertexId, check_vertex


@dataclass(frozen=True, slots=True)
class Hypothesis:
    """A labeling of the vertex set by {0, 1}; 1 marks the positive region."""

    labels: tuple[int, ...]
    mask: int = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValidationError("Hypothesis must label at least one vertex")
        mask = 0
        for x, bit in enumerate(self.labels):
            if bit not in (0, 1):
                raise ValidationError(f"Label at {x} is {bit!r}, expected 0 or 1")
            mask |= bit << x
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_positive(cls, n: int, positives: Iterable[VertexId]) -> Self:
        labels = [0] * n
        for x in positives:
            check_vertex(x, n)
            labels[x] = 1
        return cls(tuple(labels))

    @classmethod
    def from_bits(cls, bits: str) -> Self:
        if set(bits) - {"0", "1"}:
            raise ValidationError(f"Not a bit-string: {bits!r}")
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def all_negative(cls, n: int) -> Self:
        return cls((0,) * n)

    @classmethod
    def all_positive(cls, n: int) -> Self:
        return cls((1,) * n)

    def __call__(self, x: VertexId) -> int:
        return self.labels[x]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def positive_set(self) -> frozenset[VertexId]:
        return frozenset(x for x, bit in enumerate(self.labels) if bit)

    def bits(self) -> str:
        return "".join(map(str, self.labels))

    def digest(self) -> str:
        """Short auditable fingerprint: hash prefix and positive-set size."""
        h = hashlib.blake2b(self.bits().encode(), digest_size=6).hexdigest()
        return f"{h}:{sum(self.labels)}"


@dataclass(frozen=True, slots=True)
class HypothesisClass:
    """Finite ordered collection of distinct hypotheses on one universe."""

    members: tuple[Hypothesis, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValidationError("Hypothesis class must not be empty")
        n = self.members[0].n
        if any(h.n != n for h in self.members):
            raise ValidationError("Hypothesis class members must share universe")
        if len(set(self.members)) != len(self.members):
            raise ValidationError("Hypothesis class contains duplicates")

    @classmethod
    def from_bits(cls, rows: Iterable[str]) -> Self:
        return cls(tuple(Hypothesis.from_bits(row) for row in rows))

    @classmethod
    def singletons(cls, n: int, points: Iterable[VertexId] | None = None) -> Self:
        chosen = range(n) if points is None else points
        return cls(tuple(Hypothesis.from_positive(n, (x,)) for x in chosen))

    @classmethod
    def power_set(cls, n: int) -> Self:
        return cls(
            tuple(
                Hypothesis(tuple((mask >> x) & 1 for x in range(n)))
                for mask in range(1 << n)
            )
        )

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Hypothesis]:
        return iter(self.members)

    def __getitem__(self, index: int) -> Hypothesis:
        return self.members[index]

    @property
    def n(self) -> int:
        return self.members[0].n

    def index_of(self, h: Hypothesis) -> int:
        return self.members.index(h)

    def label_matrix(self) -> np.ndarray:
        """|H| x n uint8 matrix of labels."""
        return np.array([h.labels for h in self.members], dtype=np.uint8)


@dataclass(frozen=True, slots=True)
class Agent:
    """An example (x, y): original feature vertex and true label."""

    x: VertexId
    y: int

    def __post_init__(self) -> None:
        if self.y not in (0, 1):
            raise ValidationError(f"Agent label must be 0 or 1, got {self.y!r}")
        if self.x < 0:
            raise ValidationError(f"Agent vertex must be non-negative, got {self.x}")


@dataclass(frozen=True, slots=True)
class FiniteDistribution:
    """Finite-support distribution over agents with exact rational weights."""

    support: tuple[tuple[Agent, Fraction], ...]

    def __post_init__(self) -> None:
        if not self.support:
            raise ValidationError("Distribution support must not be empty")
        if any(p < 0 for _, p in self.support):
            raise ValidationError("Distribution weights must be non-negative")
        total = sum((p for _, p in self.support), Fraction(0))
        if total != 1:
            raise ValidationError(f"Distribution weights sum to {total}, not 1")

    @classmethod
    def from_mapping(cls, weights: Mapping[Agent, Fraction | int]) -> Self:
        return cls(tuple((agent, Fraction(p)) for agent, p in weights.items()))

    @classmethod
    def uniform(cls, agents: Sequence[Agent]) -> Self:
        if not agents:
            raise ValidationError("Uniform distribution needs at least one agent")
        merged: dict[Agent, Fraction] = {}
        for agent in agents:
            merged[agent] = merged.get(agent, Fraction(0)) + Fraction(1, len(agents))
        return cls.from_mapping(merged)

    @classmethod
    def point_mass(cls, agent: Agent) -> Self:
        return cls(((agent, Fraction(1)),))

    def __iter__(self) -> Iterator[tuple[Agent, Fraction]]:
        return iter(self.support)

    @property
    def agents(self) -> tuple[Agent, ...]:
        return tuple(agent for agent, _ in self.support)

    def marginal(self) -> dict[VertexId, Fraction]:
        """Marginal probability of each feature vertex."""
        out: dict[VertexId, Fraction] = {}
        for agent, p in self.support:
            out[agent.x] = out.get(agent.x, Fraction(0)) + p
        return out

    def sample(self, rng: np.random.Generator, size: int) -> list[Agent]:
        probs = np.array([float(p) for _, p in self.support])
        probs /= probs.sum()
        picks = rng.choice(len(self.support), size=size, p=probs)
        return [self.support[int(i)][0] for i in picks]
