"""Tests for the VC and Littlestone oracles and the induced class."""

from __future__ import annotations

import itertools
import math
import unittest
from unittest.mock import patch

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import config
from api.constructions import (
    binary_rep_construction,
    binary_rep_hubs,
    random_fixture,
    star_singletons,
)
from api.dimensions import (
    LittlestoneOracle,
    induce_class,
    littlestone_dimension,
    sauer_upper_bound,
    vc_dimension,
    vc_upper_bound,
    verify_vcd_upper,
)
from api.exceptions import ResourceBudgetError, ValidationError
from api.graphs import ManipulationGraph
from api.hypotheses import Hypothesis, HypothesisClass


class TestVcDimension(unittest.TestCase):
    def test_power_set(self) -> None:
        self.assertEqual(vc_dimension(HypothesisClass.power_set(3)), 3)

    def test_singletons(self) -> None:
        self.assertEqual(vc_dimension(HypothesisClass.singletons(5)), 1)

    def test_single_hypothesis(self) -> None:
        self.assertEqual(vc_dimension([(0, 1, 1)]), 0)

    def test_thresholds_on_a_line(self) -> None:
        rows = [tuple(int(x >= t) for x in range(6)) for t in range(7)]

        self.assertEqual(vc_dimension(rows), 1)

    def test_empty_class_rejected(self) -> None:
        with self.assertRaises(ValidationError):
            vc_dimension([])

    def test_budget_reports_size_reached(self) -> None:
        with (
            patch.object(config, "MAX_CLASS_SIZE", 4),
            self.assertRaises(ResourceBudgetError) as caught,
        ):
            vc_dimension(HypothesisClass.power_set(3))
        self.assertEqual(caught.exception.reached, 8)


class TestLittlestoneDimension(unittest.TestCase):
    def test_single_hypothesis(self) -> None:
        self.assertEqual(littlestone_dimension([(1, 0)]), 0)

    def test_singletons(self) -> None:
        self.assertEqual(littlestone_dimension(HypothesisClass.singletons(6)), 1)

    def test_power_set(self) -> None:
        self.assertEqual(littlestone_dimension(HypothesisClass.power_set(4)), 4)

    def test_thresholds_grow_logarithmically(self) -> None:
        rows = [tuple(int(x >= t) for x in range(7)) for t in range(8)]

        self.assertEqual(littlestone_dimension(rows), 3)

    def test_empty_subspace_is_minus_one(self) -> None:
        oracle = LittlestoneOracle.for_class(HypothesisClass.singletons(3))

        self.assertEqual(oracle.ldim(0), -1)
        self.assertEqual(oracle.ldim(oracle.full), 1)
        self.assertEqual(oracle.column(1), 0b010)

    @given(seed=st.integers(0, 10_000), n=st.integers(2, 6), size=st.integers(1, 12))
    @settings(max_examples=30, derandomize=True, deadline=None)
    def test_vc_never_exceeds_ldim(self, seed: int, n: int, size: int) -> None:
        cls = random_fixture(n, 0, min(size, 1 << n), seed).cls

        vc = vc_dimension(cls)
        ldim = littlestone_dimension(cls)

        self.assertLessEqual(vc, ldim)
        self.assertLessEqual(ldim, math.floor(math.log2(len(cls))))


class TestInducedClass(unittest.TestCase):
    def test_arcless_graph_keeps_class(self) -> None:
        cls = HypothesisClass.from_bits(["001", "010", "110"])

        induced = induce_class(ManipulationGraph.empty(3), cls)

        self.assertEqual(induced.members, tuple(h.labels for h in cls))
        self.assertEqual(induced.sources, (0, 1, 2))

    def test_all_positive_class(self) -> None:
        graph = ManipulationGraph.from_arcs(3, [(0, 1)])
        cls = HypothesisClass((Hypothesis.all_positive(3),))

        self.assertEqual(induce_class(graph, cls).members, ((1, 1, 1),))

    def test_duplicates_collapse_to_first_source(self) -> None:
        graph = ManipulationGraph.from_arcs(3, [(0, 1), (0, 2)])
        cls = HypothesisClass.from_bits(["010", "001", "100", "110"])

        induced = induce_class(graph, cls)

        self.assertEqual(induced.members, ((1, 1, 0), (1, 0, 1), (1, 0, 0)))
        self.assertEqual(induced.sources, (0, 1, 2))
        self.assertEqual(len(induced.as_hypothesis_class()), 3)

    def test_universe_mismatch_rejected(self) -> None:
        with self.assertRaises(ValidationError):
            induce_class(ManipulationGraph.empty(2), HypothesisClass.singletons(3))

    def test_binrep_hubs_realize_every_pattern(self) -> None:
        fixture = binary_rep_construction(1, 4)
        hubs = binary_rep_hubs(1, 4)

        patterns = {
            tuple(row[x] for x in hubs)
            for row in induce_class(fixture.star_graph, fixture.cls).members
        }

        self.assertEqual(hubs, (0, 5))
        self.assertEqual(patterns, set(itertools.product((0, 1), repeat=2)))


class TestEqualityConstructions(unittest.TestCase):
    def test_binrep_one_eight(self) -> None:
        fixture = binary_rep_construction(1, 8)
        induced = induce_class(fixture.star_graph, fixture.cls)

        self.assertEqual(vc_dimension(fixture.cls), 1)
        self.assertEqual(littlestone_dimension(fixture.cls), 1)
        self.assertEqual(vc_dimension(induced), 3)
        self.assertEqual(littlestone_dimension(induced), 3)

    def test_binrep_two_two(self) -> None:
        fixture = binary_rep_construction(2, 2)
        induced = induce_class(fixture.star_graph, fixture.cls)

        self.assertEqual(vc_dimension(fixture.cls), 2)
        self.assertEqual(littlestone_dimension(fixture.cls), 2)
        self.assertEqual(vc_dimension(induced), 2)
        self.assertEqual(littlestone_dimension(induced), 2)

    def test_star_ldim_counts_stars(self) -> None:
        self.assertEqual(littlestone_dimension(star_singletons(2, 2).cls), 2)
        self.assertEqual(littlestone_dimension(star_singletons(1, 3).cls), 1)


class TestVcUpperBound(unittest.TestCase):
    def test_arcless_graph(self) -> None:
        cls = HypothesisClass.power_set(3)

        report = verify_vcd_upper(ManipulationGraph.empty(3), cls)

        self.assertEqual(report.d_bar, report.d)
        self.assertTrue(report.holds)

    def test_binrep_meets_ceil_form_with_equality(self) -> None:
        fixture = binary_rep_construction(1, 8)

        report = verify_vcd_upper(fixture.star_graph, fixture.cls)

        self.assertEqual((report.d, report.k, report.d_bar, report.bound), (1, 8, 3, 3))
        self.assertTrue(report.holds)
        self.assertTrue(report.near_bound)
        self.assertGreaterEqual(report.sauer_bound, report.d_bar)

    def test_ceil_form_can_be_exceeded_on_small_fixture(self) -> None:
        # Features 0, 1 with arcs 0 -> 2 and 1 -> 3.
        graph = ManipulationGraph.from_arcs(4, [(0, 2), (1, 3)])
        cls = HypothesisClass.from_bits(["0000", "0010", "0001", "1100"])

        report = verify_vcd_upper(graph, cls)

        self.assertEqual((report.d, report.k, report.d_bar), (1, 1, 2))
        self.assertFalse(report.holds)
        self.assertLessEqual(report.d_bar, report.sauer_bound)

    def test_bound_formulas(self) -> None:
        self.assertEqual(vc_upper_bound(0, 3), 1)
        self.assertEqual(vc_upper_bound(2, 4), 6)
        self.assertEqual(sauer_upper_bound(0, 5, 10), 0)
        self.assertEqual(sauer_upper_bound(1, 8, 27), 5)

    @pytest.mark.slow
    @given(
        seed=st.integers(0, 100_000),
        n=st.integers(3, 10),
        k=st.integers(1, 4),
        size=st.integers(2, 32),
    )
    @settings(max_examples=50, derandomize=True, deadline=None)
    def test_random_fixtures_respect_exact_bound(
        self, seed: int, n: int, k: int, size: int
    ) -> None:
        fixture = random_fixture(n, k, min(size, 1 << n), seed)

        report = verify_vcd_upper(fixture.star_graph, fixture.cls)

        self.assertLessEqual(report.d_bar, report.sauer_bound)
        self.assertLessEqual(report.d_bar, math.floor(math.log2(len(fixture.cls))))


if __name__ == "__main__":
    unittest.main()
