"""Weighted expert pools shared by the strategic reductions."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import config

from ..exceptions import RealizabilityViolationError
from ..graphs import VertexId
from ..hypotheses import Hypothesis
from .protocols import StandardOnlineLearner

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class Expert:
    learner: StandardOnlineLearner
    weight: Fraction
    feed: tuple[tuple[VertexId, int], ...] = ()
    """Examples fed so far, kept for survivor audits."""

    def positive_on(self, vertices: Iterable[VertexId]) -> VertexId | None:
        """First vertex the learner labels 1, in the given order."""
        for x in vertices:
            if self.learner.predict(x):
                return x
        return None

    def hypothesis(self, n: int) -> Hypothesis:
        return Hypothesis(tuple(self.learner.predict(x) for x in range(n)))


class ExpertPool:
    """Experts with exact rational weights.

    Experts whose learner rejects a feed as inconsistent with its class are
    dropped; an emptied pool raises RealizabilityViolationError.
    """

    def __init__(self, learner: StandardOnlineLearner) -> None:
        self.experts: list[Expert] = [Expert(learner, Fraction(1))]
        self.pruned_weight = Fraction(0)

    def __len__(self) -> int:
        return len(self.experts)

    @property
    def total_weight(self) -> Fraction:
        return sum((e.weight for e in self.experts), Fraction(0))

    def positive_weight(self, x: VertexId) -> Fraction:
        return sum(
            (e.weight for e in self.experts if e.learner.predict(x)), Fraction(0)
        )

    def consistent_with(self, h: Hypothesis) -> list[Expert]:
        """Experts whose every fed example agrees with h."""
        return [e for e in self.experts if all(h(x) == b for x, b in e.feed)]

    def penalize(self, targets: Sequence[tuple[Expert, VertexId]]) -> None:
        """Feed (v, 0) to each listed expert and halve its weight."""
        chosen = {id(e): v for e, v in targets}
        survivors: list[Expert] = []
        for expert in self.experts:
            v = chosen.get(id(expert))
            if v is None:
                survivors.append(expert)
                continue
            try:
                expert.learner.update(v, 0)
            except RealizabilityViolationError:
                logger.debug("Dropping expert inconsistent with (%d, 0)", v)
                continue
            expert.weight /= 2
            expert.feed = (*expert.feed, (v, 0))
            survivors.append(expert)
        self._replace(survivors)

    def split(
        self, targets: Sequence[Expert], neighborhood: Sequence[VertexId]
    ) -> None:
        """Replace each target by children fed (x, 1), one per x in the neighborhood.

        Each child carries weight w / (2·|neighborhood|).
        """
        chosen = {id(e) for e in targets}
        share = 2 * len(neighborhood)
        out: list[Expert] = []
        children = 0
        for expert in self.experts:
            if id(expert) not in chosen:
                out.append(expert)
                continue
            for x in neighborhood:
                try:
                    child = expert.learner.clone_with_example(x, 1)
                except RealizabilityViolationError:
                    continue
                out.append(Expert(child, expert.weight / share, (*expert.feed, (x, 1))))
                children += 1
        logger.debug(
            "Split %d experts over %d vertices into %d children",
            len(chosen),
            len(neighborhood),
            children,
        )
        self._replace(out)

    def _replace(self, experts: list[Expert]) -> None:
        if config.VOTE_WEIGHT_FLOOR > 0:
            floor = Fraction(config.VOTE_WEIGHT_FLOOR)
            kept = [e for e in experts if e.weight >= floor]
            pruned = sum((e.weight for e in experts if e.weight < floor), Fraction(0))
            if pruned:
                self.pruned_weight += pruned
                logger.debug("Pruned %s weight below floor %s", pruned, floor)
            experts = kept
        if not experts:
            raise RealizabilityViolationError(
                "Every expert was eliminated; the feed is not realizable"
            )
        self.experts = experts
