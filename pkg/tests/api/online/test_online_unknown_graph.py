"""Tests for the unknown-graph online learner in both disclosure modes."""

from __future__ import annotations

import unittest

from api.bounds import graph_class_floor, ug_ceiling
from api.constructions import (
    chain_construction,
    realizable_distribution,
    star_singletons,
    ug_online_lb_construction,
)
from api.dimensions import littlestone_dimension
from api.exceptions import ProtocolError, ValidationError
from api.feedback import FeedbackSetting, RoundFeedback
from api.graphs import GraphClass, ManipulationGraph
from api.hypotheses import HypothesisClass
from api.online import UnknownGraphMode, ug_online
from api.protocol import IIDSource, adversary, run_online


class TestXThenV(unittest.TestCase):
    def test_single_graph_reduces_to_known_graph(self) -> None:
        fixture = star_singletons(1, 3)
        graph = fixture.star_graph
        target = fixture.cls[2]
        learner = ug_online(fixture.cls, GraphClass((graph,)))

        transcript = run_online(
            learner,
            IIDSource(realizable_distribution(graph, target, seed=5), graph, 5, target),
            FeedbackSetting.UG_X_THEN_V,
            60,
        )

        ldim = littlestone_dimension(fixture.cls)
        self.assertLessEqual(transcript.mistakes, ug_ceiling(ldim, 3, 1))
        self.assertEqual(learner.eliminations, 0)
        self.assertEqual(learner.k_bound, 3)

    def test_column_adversary_forces_floor(self) -> None:
        fixture = ug_online_lb_construction(4)
        assert fixture.graph_class is not None
        learner = ug_online(fixture.cls, fixture.graph_class)

        transcript = run_online(
            learner,
            adversary("ug-online-lb", fixture),
            FeedbackSetting.UG_X_THEN_V,
            4,
            cls=fixture.cls,
        )

        self.assertGreaterEqual(transcript.mistakes, graph_class_floor(4))
        self.assertEqual(transcript.target_loss, 0)

    def test_majority_neighborhood(self) -> None:
        graphs = GraphClass(
            (
                ManipulationGraph.from_arcs(3, [(0, 1)], 1),
                ManipulationGraph.from_arcs(3, [(0, 1)], 1),
                ManipulationGraph.from_arcs(3, [(0, 2)], 1),
            )
        )
        learner = ug_online(HypothesisClass.singletons(3), graphs)

        self.assertEqual(learner.majority_neighborhood(0), (0, 1))
        self.assertEqual(learner.majority_neighborhood(2), (2,))

    def test_minority_arc_mistake_eliminates_graphs(self) -> None:
        graphs = GraphClass(
            (
                ManipulationGraph.from_arcs(3, [(0, 1)], 1),
                ManipulationGraph.from_arcs(3, [(0, 2)], 1),
            )
        )
        learner = ug_online(HypothesisClass.singletons(3), graphs)

        h = learner.propose(0)
        learner.observe(RoundFeedback(1, h, 1, 0, x=0, v=2))

        self.assertEqual(h(2), 1)
        self.assertEqual(learner.consistent, [1])
        self.assertEqual(learner.eliminations, 1)

    def test_mismatched_x_rejected(self) -> None:
        learner = ug_online(
            HypothesisClass.singletons(2), GraphClass((ManipulationGraph.empty(2),))
        )
        h = learner.propose(0)

        with self.assertRaises(ProtocolError):
            learner.observe(RoundFeedback(1, h, 0, 0, x=1, v=1))

    def test_universe_mismatch(self) -> None:
        with self.assertRaises(ValidationError):
            ug_online(
                HypothesisClass.singletons(3), GraphClass((ManipulationGraph.empty(2),))
            )


class TestPairAfter(unittest.TestCase):
    def test_chain_adversary(self) -> None:
        fixture = chain_construction(3)
        assert fixture.graph_class is not None
        learner = ug_online(
            fixture.cls, fixture.graph_class, mode=UnknownGraphMode.PAIR_AFTER
        )

        transcript = run_online(
            learner,
            adversary("ug-chain", fixture),
            FeedbackSetting.UG_PAIR_AFTER,
            6,
            cls=fixture.cls,
        )

        self.assertEqual(transcript.mistakes, 3)
        self.assertEqual(transcript.target_loss, 0)
        self.assertEqual(learner.eliminations, 1)
        self.assertEqual(len(learner.consistent), 1)

    def test_pair_mode_runs_without_x_first(self) -> None:
        fixture = chain_construction(2)
        assert fixture.graph_class is not None
        learner = ug_online(
            fixture.cls, fixture.graph_class, mode=UnknownGraphMode.PAIR_AFTER
        )

        self.assertFalse(learner.needs_x_first)
        self.assertEqual(learner.supported_settings, {FeedbackSetting.UG_PAIR_AFTER})
        self.assertEqual(learner.propose(None).positive_set, frozenset())


if __name__ == "__main__":
    unittest.main()
