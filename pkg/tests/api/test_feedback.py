"""Tests for feedback settings and round feedback records."""

from __future__ import annotations

import unittest

from api.exceptions import ProtocolError, ValidationError
from api.feedback import FeedbackSetting, RoundFeedback
from api.hypotheses import Hypothesis


class TestFeedbackSetting(unittest.TestCase):
    def test_parse_is_case_insensitive(self) -> None:
        self.assertIs(FeedbackSetting.parse(" PMF-X "), FeedbackSetting.PMF_X)

    def test_parse_unknown_lists_choices(self) -> None:
        with self.assertRaises(ValidationError) as caught:
            FeedbackSetting.parse("full")
        self.assertIn("ug-pair", caught.exception.user_message)

    def test_disclosure_and_graph_knowledge(self) -> None:
        disclosed = {s for s in FeedbackSetting if s.discloses_x_first}
        known = {s for s in FeedbackSetting if s.graph_known}

        self.assertEqual(
            disclosed, {FeedbackSetting.FULLY_INFORMATIVE, FeedbackSetting.UG_X_THEN_V}
        )
        self.assertEqual(
            known,
            {FeedbackSetting.FULLY_INFORMATIVE, FeedbackSetting.PMF_X, FeedbackSetting.PMF_V},
        )


class TestRoundFeedback(unittest.TestCase):
    def test_mistake_kinds(self) -> None:
        h = Hypothesis.all_negative(2)

        false_negative = RoundFeedback(1, h, yhat=0, y=1)
        false_positive = RoundFeedback(1, h, yhat=1, y=0)

        self.assertTrue(false_negative.mistake)
        self.assertTrue(false_negative.false_negative)
        self.assertFalse(false_negative.false_positive)
        self.assertTrue(false_positive.false_positive)
        self.assertFalse(RoundFeedback(1, h, yhat=1, y=1).mistake)

    def test_withheld_fields_raise_protocol_error(self) -> None:
        feedback = RoundFeedback(3, Hypothesis.all_negative(2), yhat=0, y=1)

        with self.assertRaises(ProtocolError):
            feedback.require_x()
        with self.assertRaises(ProtocolError):
            feedback.require_v()
        with self.assertRaises(ProtocolError):
            feedback.require_neighborhood()

    def test_present_fields_returned(self) -> None:
        feedback = RoundFeedback(
            1, Hypothesis.all_negative(3), 0, 1, x=0, v=0, neighborhood=(0, 2)
        )

        self.assertEqual(feedback.require_x(), 0)
        self.assertEqual(feedback.require_v(), 0)
        self.assertEqual(feedback.require_neighborhood(), (0, 2))


if __name__ == "__main__":
    unittest.main()
