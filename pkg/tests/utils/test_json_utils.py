"""Tests for JSON file helpers.
Covers tolerant and strict loads, the canonical text form and atomic saves.
"""

from __future__ import annotations

import json
import unittest
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import override
from unittest.mock import patch

import utils.json_utils as json_utils
from api.exceptions import DataAccessError
from utils.json_types import JsonObject


class TestGetJson(unittest.TestCase):
    @override
    def setUp(self) -> None:
        self._tmp: TemporaryDirectory[str] = TemporaryDirectory()
        self._path: Path = Path(self._tmp.name) / "data.json"

    @override
    def tearDown(self) -> None:
        self._tmp.cleanup()

    def test_get_json_missing_returns_none(self) -> None:
        self.assertIsNone(json_utils.get_json(self._path))

    def test_get_json_invalid_returns_none(self) -> None:
        self._path.write_text("{not json", encoding="utf-8")

        result = json_utils.get_json(self._path)

        self.assertIsNone(result)

    def test_get_json_top_level_list_returns_none(self) -> None:
        self._path.write_text("[1, 2]", encoding="utf-8")

        self.assertIsNone(json_utils.get_json(self._path))

    def test_get_json_valid_returns_dict(self) -> None:
        payload: JsonObject = {"a": 1, "b": {"c": True}}
        self._path.write_text(json.dumps(payload), encoding="utf-8")

        result = json_utils.get_json(self._path)

        self.assertEqual(result, payload)

    def test_load_json_raises_when_unreadable(self) -> None:
        with self.assertRaises(DataAccessError) as caught:
            json_utils.load_json(self._path)

        self.assertIn("data.json", caught.exception.user_message)


class TestDumpJson(unittest.TestCase):
    def test_canonical_form(self) -> None:
        text = json_utils.dump_json({"b": (1, 2), "a": "é"})

        self.assertEqual(
            text, '{\n    "a": "é",\n    "b": [\n        1,\n        2\n    ]\n}\n'
        )

    def test_rejects_non_string_keys(self) -> None:
        with self.assertRaises(TypeError):
            json_utils.dump_json({"a": {1: "x"}})  # pyright: ignore[reportArgumentType]


class TestSaveJson(unittest.TestCase):
    @override
    def setUp(self) -> None:
        self._tmp: TemporaryDirectory[str] = TemporaryDirectory()
        self._root: Path = Path(self._tmp.name)
        self._path: Path = self._root / "nested" / "summary.json"

    @override
    def tearDown(self) -> None:
        self._tmp.cleanup()

    def test_save_json_creates_parent_dirs_and_writes(self) -> None:
        json_utils.save_json(self._path, {"x": 1})

        self.assertEqual(json.loads(self._path.read_text(encoding="utf-8")), {"x": 1})
        self.assertEqual([p.name for p in self._path.parent.iterdir()], ["summary.json"])

    def test_save_json_overwrites(self) -> None:
        json_utils.save_json(self._path, {"x": 1})
        json_utils.save_json(self._path, {"x": 2})

        self.assertEqual(json_utils.load_json(self._path), {"x": 2})

    def test_save_json_retries_then_raises(self) -> None:
        with (
            patch.object(Path, "replace", side_effect=OSError("busy")) as replace,
            patch("utils.json_utils.time.sleep") as sleep,
            self.assertRaises(DataAccessError),
        ):
            json_utils.save_json(self._path, {"x": 1})

        self.assertEqual(replace.call_count, 3)
        self.assertEqual(sleep.call_count, 2)
        self.assertFalse(self._path.exists())

    def test_save_json_recovers_after_transient_failure(self) -> None:
        real_replace = Path.replace
        calls: list[Path] = []

        def flaky(source: Path, target: Path) -> Path:
            calls.append(source)
            if len(calls) == 1:
                raise OSError("busy")
            return real_replace(source, target)

        with (
            patch.object(Path, "replace", autospec=True, side_effect=flaky),
            patch("utils.json_utils.time.sleep"),
        ):
            json_utils.save_json(self._path, {"x": 3})

        self.assertEqual(len(calls), 2)
        self.assertEqual(json_utils.load_json(self._path), {"x": 3})


if __name__ == "__main__":
    unittest.main()
