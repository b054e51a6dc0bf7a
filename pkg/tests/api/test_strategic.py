"""Tests for agent best responses and strategic losses."""

from __future__ import annotations

import unittest
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from api.constructions import random_fixture, realizable_distribution, star_singletons
from api.exceptions import TieBreakError, ValidationError
from api.graphs import ManipulationGraph
from api.hypotheses import Agent, FiniteDistribution, Hypothesis, HypothesisClass
from api.strategic import (
    best_response,
    cumulative_strategic_loss,
    empirical_strategic_loss,
    induced_label,
    induced_labeling,
    mixture_strategic_loss,
    population_strategic_loss,
    sampled_strategic_loss,
    strategic_loss,
)
from api.tie_break import Scripted, UniformRandom


def star() -> ManipulationGraph:
    """x0 -> {x1, x2}."""
    return ManipulationGraph.from_arcs(3, [(0, 1), (0, 2)])


class TestBestResponse(unittest.TestCase):
    def test_single_positive_neighbor_is_reached(self) -> None:
        h = Hypothesis.from_positive(3, [1])

        self.assertEqual(best_response(star(), h, 0), 1)

    def test_positive_agent_stays(self) -> None:
        self.assertEqual(best_response(star(), Hypothesis.all_positive(3), 0), 0)

    def test_no_positive_neighbor_stays(self) -> None:
        self.assertEqual(best_response(star(), Hypothesis.all_negative(3), 0), 0)

    def test_uniform_ties_are_fair(self) -> None:
        h = Hypothesis.from_positive(3, [1, 2])
        breaker = UniformRandom(7).breaker()

        hits = sum(best_response(star(), h, 0, breaker) == 1 for _ in range(10_000))

        self.assertGreaterEqual(hits / 10_000, 0.47)
        self.assertLessEqual(hits / 10_000, 0.53)

    def test_scripted_ties_follow_script(self) -> None:
        h = Hypothesis.from_positive(3, [1, 2])
        breaker = Scripted((1, 0)).breaker()

        self.assertEqual(best_response(star(), h, 0, breaker), 2)
        self.assertEqual(best_response(star(), h, 0, breaker), 1)
        with self.assertRaises(TieBreakError):
            best_response(star(), h, 0, breaker)

    def test_scripted_choice_out_of_range(self) -> None:
        h = Hypothesis.from_positive(3, [1, 2])

        with self.assertRaises(TieBreakError):
            best_response(star(), h, 0, Scripted((2,)).breaker())

    def test_universe_mismatch_rejected(self) -> None:
        with self.assertRaises(ValidationError):
            best_response(star(), Hypothesis.all_negative(4), 0)


class TestInducedLabels(unittest.TestCase):
    def test_induced_label_cases(self) -> None:
        graph = star()

        self.assertEqual(induced_label(graph, Hypothesis.all_negative(3), 0), 0)
        self.assertEqual(induced_label(graph, Hypothesis.from_positive(3, [2]), 0), 1)
        self.assertEqual(induced_label(graph, Hypothesis.from_positive(3, [0]), 1), 0)

    def test_arcless_graph_induces_h_itself(self) -> None:
        graph = ManipulationGraph.empty(3)

        for h in HypothesisClass.power_set(3):
            self.assertEqual(induced_labeling(graph, h), h.labels)

    @given(seed=st.integers(0, 10_000), n=st.integers(2, 8), k=st.integers(0, 3))
    @settings(max_examples=40, derandomize=True, deadline=None)
    def test_tie_breaking_never_changes_induced_label(
        self, seed: int, n: int, k: int
    ) -> None:
        fixture = random_fixture(n, k, 1, seed)
        graph = fixture.star_graph
        h = Hypothesis(tuple(int(b) for b in np.random.default_rng(seed).integers(0, 2, n)))
        breaker = UniformRandom(seed).breaker()

        labels = tuple(induced_label(graph, h, x, breaker) for x in range(n))

        self.assertEqual(labels, induced_labeling(graph, h))


class TestStrategicLosses(unittest.TestCase):
    def test_gaming_flips_negative_agent(self) -> None:
        graph = ManipulationGraph.from_arcs(2, [(0, 1)])
        h = Hypothesis.from_positive(2, [1])

        self.assertEqual(strategic_loss(graph, h, Agent(0, 0)), 1)
        self.assertEqual(strategic_loss(graph, h, Agent(0, 1)), 0)

    def test_empirical_loss_requires_sample(self) -> None:
        with self.assertRaises(ValidationError):
            empirical_strategic_loss(star(), Hypothesis.all_negative(3), [])

    def test_empirical_loss_matches_per_agent_sum(self) -> None:
        fixture = star_singletons(1, 3)
        graph = fixture.star_graph
        h = fixture.cls[1]
        sample = [Agent(0, 1), Agent(1, 1), Agent(2, 1), Agent(3, 0)]

        expected = Fraction(sum(strategic_loss(graph, h, a) for a in sample), 4)

        self.assertEqual(empirical_strategic_loss(graph, h, sample), expected)
        self.assertEqual(expected, Fraction(1, 4))

    def test_target_has_zero_empirical_loss(self) -> None:
        fixture = star_singletons(2, 2)
        graph = fixture.star_graph
        target = fixture.cls[fixture.target or 0]
        bar = induced_labeling(graph, target)
        sample = [Agent(x, bar[x]) for x in range(graph.n)]

        self.assertEqual(empirical_strategic_loss(graph, target, sample), 0)

    def test_population_loss_point_mass_and_uniform(self) -> None:
        graph = ManipulationGraph.from_arcs(2, [(0, 1)])
        h = Hypothesis.from_positive(2, [1])
        wrong, right = Agent(0, 0), Agent(1, 1)

        self.assertEqual(
            population_strategic_loss(graph, h, FiniteDistribution.point_mass(wrong)), 1
        )
        self.assertEqual(
            population_strategic_loss(graph, h, FiniteDistribution.uniform([wrong, right])),
            Fraction(1, 2),
        )

    def test_all_negative_misses_positive_hub(self) -> None:
        fixture = star_singletons(1, 3)

        loss = strategic_loss(fixture.star_graph, Hypothesis.all_negative(4), Agent(0, 1))

        self.assertEqual(loss, 1)

    def test_sampled_loss_close_to_exact(self) -> None:
        fixture = random_fixture(8, 2, 4, 3)
        graph = fixture.star_graph
        assert fixture.target is not None
        dist = realizable_distribution(graph, fixture.cls[fixture.target], 3)
        h = fixture.cls[(fixture.target + 1) % 4]

        estimate = sampled_strategic_loss(graph, h, dist, seed=11)

        self.assertAlmostEqual(
            estimate, float(population_strategic_loss(graph, h, dist)), delta=0.01
        )
        with self.assertRaises(ValidationError):
            sampled_strategic_loss(graph, h, dist, seed=11, draws=0)

    def test_agents_outside_universe_rejected(self) -> None:
        graph = ManipulationGraph.from_arcs(2, [(0, 1)])
        h = Hypothesis.from_positive(2, [1])
        stray = Agent(5, 1)

        with self.assertRaisesRegex(ValidationError, "outside the universe"):
            population_strategic_loss(graph, h, FiniteDistribution.point_mass(stray))
        with self.assertRaisesRegex(ValidationError, "outside the universe"):
            cumulative_strategic_loss(graph, h, [Agent(0, 0), stray])
        with self.assertRaisesRegex(ValidationError, "outside the universe"):
            sampled_strategic_loss(graph, h, FiniteDistribution.point_mass(stray), seed=0)

    def test_cumulative_and_mixture_losses(self) -> None:
        graph = ManipulationGraph.from_arcs(2, [(0, 1)])
        h = Hypothesis.from_positive(2, [1])
        agents = [Agent(0, 0), Agent(0, 1), Agent(1, 0)]

        self.assertEqual(cumulative_strategic_loss(graph, h, agents), 2)
        self.assertAlmostEqual(
            mixture_strategic_loss(
                graph, [(h, 0.25), (Hypothesis.all_negative(2), 0.75)], Agent(0, 0)
            ),
            0.25,
        )
        with self.assertRaises(ValidationError):
            mixture_strategic_loss(graph, [(h, 0.0)], Agent(0, 0))


if __name__ == "__main__":
    unittest.main()
