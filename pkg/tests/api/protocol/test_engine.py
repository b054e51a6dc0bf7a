"""Tests for the round engine: compatibility, feedback, replay and hindsight."""

from __future__ import annotations

import unittest
from typing import override

from api.constructions import star_singletons
from api.exceptions import ProtocolError, RealizabilityViolationError, ValidationError
from api.feedback import FeedbackSetting, RoundFeedback
from api.graphs import ManipulationGraph, VertexId
from api.hypotheses import Agent, FiniteDistribution, Hypothesis, HypothesisClass
from api.online import AlternatingLearner, StandardBaseline, red2online_fi, soa
from api.protocol import (
    IIDSource,
    SourceMove,
    adversary,
    best_in_hindsight,
    check_compatible,
    run_online,
)
from api.tie_break import UniformRandom


class _Recorder(AlternatingLearner):
    """Always plays a fixed hypothesis and keeps every feedback record."""

    def __init__(self, h: Hypothesis) -> None:
        super().__init__()
        self.h = h
        self.supported_settings = frozenset(FeedbackSetting)
        self.seen: list[RoundFeedback] = []

    @override
    def _propose(self, x: VertexId | None) -> Hypothesis:
        return self.h

    @override
    def _observe(self, feedback: RoundFeedback) -> None:
        self.seen.append(feedback)


class _LyingSource:
    """Discloses one agent and then sends another."""

    name = "liar"
    realizable = False
    supported_settings = frozenset(FeedbackSetting)

    def __init__(self, graph: ManipulationGraph) -> None:
        self.graph = graph

    def disclose(self, t: int) -> VertexId:
        return 0

    def respond(self, t: int, h: Hypothesis, x: VertexId | None) -> SourceMove:
        return SourceMove(Agent(1, 0), self.graph)

    def final_graph(self) -> ManipulationGraph:
        return self.graph

    def final_target(self) -> None:
        return None


class TestCheckCompatible(unittest.TestCase):
    def test_learner_setting_mismatch(self) -> None:
        fixture = star_singletons(1, 2)
        learner = red2online_fi(soa(fixture.cls), fixture.star_graph)

        with self.assertRaises(ProtocolError) as caught:
            check_compatible(
                learner, adversary("agn-contrarian", fixture), FeedbackSetting.PMF_V
            )
        self.assertIn("fi", caught.exception.user_message)

    def test_source_setting_mismatch(self) -> None:
        fixture = star_singletons(1, 2)

        with self.assertRaises(ProtocolError) as caught:
            check_compatible(
                StandardBaseline(soa(fixture.cls)),
                adversary("pmf-star", fixture),
                FeedbackSetting.FULLY_INFORMATIVE,
            )
        self.assertIn("pmf-v", caught.exception.user_message)


class TestFeedbackBySetting(unittest.TestCase):
    def setUp(self) -> None:
        self.graph = ManipulationGraph.from_arcs(2, [(0, 1)])
        self.dist = FiniteDistribution.point_mass(Agent(0, 1))

    def _first_feedback(self, setting: FeedbackSetting) -> RoundFeedback:
        learner = _Recorder(Hypothesis.all_negative(2))
        run_online(learner, IIDSource(self.dist, self.graph, 0), setting, 1)
        return learner.seen[0]

    def test_post_manipulation_x(self) -> None:
        feedback = self._first_feedback(FeedbackSetting.PMF_X)

        self.assertEqual((feedback.x, feedback.v), (0, None))
        self.assertEqual(feedback.neighborhood, (0, 1))

    def test_post_manipulation_v(self) -> None:
        feedback = self._first_feedback(FeedbackSetting.PMF_V)

        self.assertEqual((feedback.x, feedback.v), (None, 0))
        self.assertTrue(feedback.false_negative)

    def test_fully_informative(self) -> None:
        feedback = self._first_feedback(FeedbackSetting.FULLY_INFORMATIVE)

        self.assertEqual((feedback.x, feedback.v, feedback.neighborhood), (0, 0, (0, 1)))

    def test_unknown_graph_withholds_neighborhood(self) -> None:
        for setting in (FeedbackSetting.UG_X_THEN_V, FeedbackSetting.UG_PAIR_AFTER):
            feedback = self._first_feedback(setting)
            with self.subTest(setting=setting.value):
                self.assertEqual((feedback.x, feedback.v), (0, 0))
                self.assertIsNone(feedback.neighborhood)

    def test_no_neighborhood_on_correct_rounds(self) -> None:
        learner = _Recorder(Hypothesis.from_bits("01"))

        run_online(learner, IIDSource(self.dist, self.graph, 0), FeedbackSetting.PMF_V, 1)

        self.assertEqual(learner.seen[0].v, 1)
        self.assertIsNone(learner.seen[0].neighborhood)


class TestRunOnline(unittest.TestCase):
    def test_transcript_fields(self) -> None:
        graph = ManipulationGraph.from_arcs(3, [(0, 1), (0, 2)])
        dist = FiniteDistribution.point_mass(Agent(0, 1))
        cls = HypothesisClass.from_bits(["011", "000"])

        transcript = run_online(
            _Recorder(cls[0]),
            IIDSource(dist, graph, 4, target=cls[0]),
            FeedbackSetting.PMF_V,
            5,
            cls=cls,
            rule=UniformRandom(3),
            fixture="pair",
            learner_name="fixed",
            seed=4,
        )

        self.assertEqual(len(transcript), 5)
        self.assertEqual(transcript.tie_break, "uniform:3")
        self.assertEqual((transcript.fixture, transcript.learner), ("pair", "fixed"))
        self.assertTrue(all(r.v in (1, 2) for r in transcript))
        self.assertEqual((transcript.mistakes, transcript.best_loss), (0, 0))
        self.assertEqual(transcript.target_loss, 0)

    def test_declared_target_must_be_consistent(self) -> None:
        graph = ManipulationGraph.empty(2)
        dist = FiniteDistribution.point_mass(Agent(0, 1))
        source = IIDSource(dist, graph, 0, target=Hypothesis.all_negative(2))

        with self.assertRaises(RealizabilityViolationError):
            run_online(
                _Recorder(Hypothesis.all_negative(2)), source, FeedbackSetting.PMF_V, 2
            )

    def test_disclosed_agent_must_arrive(self) -> None:
        graph = ManipulationGraph.empty(2)

        with self.assertRaises(ProtocolError):
            run_online(
                _Recorder(Hypothesis.all_negative(2)),
                _LyingSource(graph),
                FeedbackSetting.FULLY_INFORMATIVE,
                1,
            )

    def test_negative_rounds_rejected(self) -> None:
        graph = ManipulationGraph.empty(2)
        dist = FiniteDistribution.point_mass(Agent(0, 0))

        with self.assertRaises(ValidationError):
            run_online(
                _Recorder(Hypothesis.all_negative(2)),
                IIDSource(dist, graph, 0),
                FeedbackSetting.PMF_V,
                -1,
            )

    def test_zero_rounds(self) -> None:
        graph = ManipulationGraph.empty(2)
        dist = FiniteDistribution.point_mass(Agent(0, 0))

        transcript = run_online(
            _Recorder(Hypothesis.all_negative(2)),
            IIDSource(dist, graph, 0),
            FeedbackSetting.PMF_V,
            0,
        )

        self.assertEqual((len(transcript), transcript.mistakes), (0, 0))


class TestBestInHindsight(unittest.TestCase):
    def test_smallest_index_among_minimizers(self) -> None:
        graph = ManipulationGraph.from_arcs(3, [(0, 1)])
        cls = HypothesisClass.singletons(3)

        self.assertEqual(
            best_in_hindsight(cls, graph, [Agent(0, 1), Agent(2, 0)]), (cls[0], 0, 0)
        )
        self.assertEqual(
            best_in_hindsight(cls, graph, [Agent(1, 1), Agent(2, 1)]), (cls[1], 1, 1)
        )


if __name__ == "__main__":
    unittest.main()
