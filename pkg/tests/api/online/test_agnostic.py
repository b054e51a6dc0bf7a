"""Tests for the expert cover and Hedge in the agnostic setting."""

from __future__ import annotations

import unittest
from unittest.mock import patch

import config
from api.bounds import fi_ceiling, hedge_regret_ceiling
from api.constructions import star_singletons
from api.exceptions import ResourceBudgetError
from api.feedback import FeedbackSetting
from api.graphs import ManipulationGraph
from api.hypotheses import Hypothesis, HypothesisClass
from api.online import (
    CoverExpert,
    Red2OnlineFI,
    agnostic_online_fi,
    cover_size,
    expert_cover,
    fit_cover_budget,
    red2online_fi,
    soa,
)
from api.protocol import adversary, run_online


class TestCover(unittest.TestCase):
    def setUp(self) -> None:
        self.graph = ManipulationGraph.from_arcs(3, [(0, 1)], 1)
        self.cls = HypothesisClass.singletons(3)

    def _factory(self) -> Red2OnlineFI:
        return red2online_fi(soa(self.cls), self.graph)

    def test_cover_size(self) -> None:
        self.assertEqual(cover_size(5, 2), 16)
        self.assertEqual(cover_size(3, 1), 4)
        self.assertEqual(cover_size(2, 5), 4)
        self.assertEqual(cover_size(4, 0), 1)

    def test_one_expert_per_flip_set(self) -> None:
        experts = expert_cover(self._factory, self.graph, 3, 1)

        self.assertEqual(
            [set(e.flips) for e in experts], [set(), {1}, {2}, {3}]
        )
        self.assertEqual(len(expert_cover(self._factory, self.graph, 3, 0)), 1)

    def test_cover_over_budget_raises(self) -> None:
        with (
            patch.object(config, "EXPERT_BUDGET", 10),
            self.assertRaises(ResourceBudgetError) as caught,
        ):
            expert_cover(self._factory, self.graph, 5, 2)
        self.assertEqual(caught.exception.reached, 16)

    def test_fit_budget_lowers_m_with_warning(self) -> None:
        with (
            patch.object(config, "EXPERT_BUDGET", 10),
            self.assertLogs("api.online.agnostic", "WARNING"),
        ):
            self.assertEqual(fit_cover_budget(5, 3), 1)

    def test_flip_turns_negative_round_positive(self) -> None:
        plain = CoverExpert(self._factory(), self.graph, frozenset())
        flipped = CoverExpert(self._factory(), self.graph, frozenset({1}))

        self.assertEqual(plain.propose(1, 0), Hypothesis.all_negative(3))
        self.assertEqual(flipped.propose(1, 0), Hypothesis.from_bits("100"))

    def test_flip_turns_positive_round_negative(self) -> None:
        expert = CoverExpert(self._factory(), self.graph, frozenset({1, 2}))
        unflipped = CoverExpert(self._factory(), self.graph, frozenset({1}))

        self.assertEqual(expert.propose(1, 2), Hypothesis.from_bits("001"))
        unflipped.propose(1, 2)

        # Both inner learners now play 1{2}; the flip clears N[2].
        self.assertEqual(unflipped.propose(2, 2), Hypothesis.from_bits("001"))
        self.assertEqual(expert.propose(2, 2), Hypothesis.all_negative(3))


class TestHedgeOverCover(unittest.TestCase):
    def test_regret_within_ceiling_against_contrarian(self) -> None:
        fixture = star_singletons(1, 2)
        horizon = 6
        budget = fi_ceiling(1, 2)
        learner = agnostic_online_fi(
            fixture.cls, fixture.star_graph, horizon, seed=3, mistake_budget=budget
        )

        transcript = run_online(
            learner,
            adversary("agn-contrarian", fixture, seed=3),
            FeedbackSetting.FULLY_INFORMATIVE,
            horizon,
            cls=fixture.cls,
        )

        self.assertEqual(learner.initial_experts, 1 << horizon)
        assert transcript.expected_regret is not None
        self.assertLessEqual(
            transcript.expected_regret,
            hedge_regret_ceiling(horizon, learner.initial_experts) + 1e-9,
        )
        self.assertIsNone(transcript.target_loss)

    def test_default_budget_fits_expert_budget(self) -> None:
        fixture = star_singletons(1, 2)

        with patch.object(config, "EXPERT_BUDGET", 8):
            learner = agnostic_online_fi(fixture.cls, fixture.star_graph, 5, seed=0)

        self.assertLessEqual(learner.initial_experts, 8)
        self.assertEqual(learner.mistake_budget, 1)

    def test_single_expert_never_moves_weights(self) -> None:
        fixture = star_singletons(1, 2)
        learner = agnostic_online_fi(
            fixture.cls, fixture.star_graph, 4, seed=0, mistake_budget=0
        )

        run_online(
            learner,
            adversary("agn-contrarian", fixture, seed=1),
            FeedbackSetting.FULLY_INFORMATIVE,
            4,
        )

        self.assertEqual(learner.eta, 0.0)
        self.assertEqual(learner.diagnostics().total_weight, 1.0)


if __name__ == "__main__":
    unittest.main()
