"""Tests for did-you-mean name lookups."""

from __future__ import annotations

import unittest

from api.exceptions import ValidationError
from utils.suggestions import lookup, suggest

_LEARNERS = {"soa": 1, "halving": 2, "red2fi": 3, "red2pmf": 4}


class TestSuggest(unittest.TestCase):
    def test_closest_first(self) -> None:
        self.assertEqual(suggest("red2fl", _LEARNERS)[0], "red2fi")

    def test_case_insensitive(self) -> None:
        self.assertEqual(suggest("HALVING", _LEARNERS)[0], "halving")

    def test_nothing_close(self) -> None:
        self.assertEqual(suggest("zzzzzzzz", _LEARNERS), [])


class TestLookup(unittest.TestCase):
    def test_hit(self) -> None:
        self.assertEqual(lookup("learner", "soa", _LEARNERS), 1)

    def test_miss_names_kind_and_known(self) -> None:
        with self.assertRaises(ValidationError) as caught:
            lookup("learner", "halvng", _LEARNERS)

        message = caught.exception.user_message
        self.assertIn("Unknown learner 'halvng'", message)
        self.assertIn("Did you mean: halving", message)
        self.assertIn("Known: halving, red2fi, red2pmf, soa", message)


if __name__ == "__main__":
    unittest.main()
