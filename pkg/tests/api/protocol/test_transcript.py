"""Tests for round records and transcript aggregates."""

from __future__ import annotations

import unittest

from api.feedback import FeedbackSetting
from api.hypotheses import Agent, Hypothesis
from api.protocol import RoundRecord, Transcript


def _record(t: int, yhat: int, y: int, expected: float | None = None) -> RoundRecord:
    return RoundRecord(
        t=t,
        x=0,
        v=0,
        hypothesis=Hypothesis.all_negative(2),
        yhat=yhat,
        y=y,
        expected_loss=expected,
    )


class TestRoundRecord(unittest.TestCase):
    def test_row(self) -> None:
        record = _record(1, 0, 1)

        row = record.as_row()

        self.assertEqual(record.mistake, 1)
        self.assertEqual(record.agent, Agent(0, 1))
        self.assertEqual(row["h"], Hypothesis.all_negative(2).digest())
        self.assertEqual((row["mistake"], row["total_weight"]), ("1", "1.0"))


class TestTranscript(unittest.TestCase):
    def setUp(self) -> None:
        self.transcript = Transcript(
            fixture="star", learner="soa", setting=FeedbackSetting.PMF_V, seed=7
        )
        self.transcript.records.extend([_record(1, 0, 1), _record(2, 1, 1)])

    def test_regret_needs_best_loss(self) -> None:
        self.assertEqual(self.transcript.mistakes, 1)
        self.assertIsNone(self.transcript.regret)

        self.transcript.best_loss = 1

        self.assertEqual(self.transcript.regret, 0)

    def test_expected_loss_needs_every_round(self) -> None:
        self.assertIsNone(self.transcript.expected_loss)

        self.transcript.records[:] = [_record(1, 0, 1, 0.25), _record(2, 1, 1, 0.5)]
        self.transcript.best_loss = 0

        self.assertEqual(self.transcript.expected_loss, 0.75)
        self.assertEqual(self.transcript.expected_regret, 0.75)

    def test_summary(self) -> None:
        summary = self.transcript.summary()

        self.assertEqual(summary["setting"], "pmf-v")
        self.assertEqual((summary["rounds"], summary["mistakes"]), (2, 1))
        self.assertIsNone(summary["target_loss"])


if __name__ == "__main__":
    unittest.main()
