"""Tests for fixture directories.
Covers the three graph layouts, the manifest and unreadable inputs.
"""

from __future__ import annotations

import json
import unittest
from dataclasses import replace
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import override

import config
from api.constructions import (
    binary_rep_construction,
    chain_construction,
    ug_online_lb_construction,
)
from api.exceptions import DataAccessError, FixtureFormatError
from api.graphs import ManipulationGraph
from repositories.fixture_store import (
    FixtureStore,
    load_class,
    load_fixture,
    load_graph,
    save_fixture,
)


class TestFixtureStore(unittest.TestCase):
    @override
    def setUp(self) -> None:
        self._tmp: TemporaryDirectory[str] = TemporaryDirectory()
        self._root: Path = Path(self._tmp.name)

    @override
    def tearDown(self) -> None:
        self._tmp.cleanup()

    def test_fixed_graph_fixture(self) -> None:
        fixture = binary_rep_construction(1, 4)

        written = save_fixture(fixture, self._root / "binrep")
        loaded = load_fixture(self._root / "binrep")

        self.assertEqual(
            sorted(p.name for p in written),
            [config.CLASS_FILE_NAME, config.GRAPH_FILE_NAME, config.MANIFEST_FILE_NAME],
        )
        self.assertEqual(loaded.star_graph, fixture.star_graph)
        self.assertEqual(loaded.cls, fixture.cls)
        self.assertEqual(loaded.vertex_names, fixture.vertex_names)
        self.assertEqual(dict(loaded.params), {"d": 1, "k": 4})

    def test_explicit_graph_class(self) -> None:
        fixture = chain_construction(3)
        store = FixtureStore(self._root / "chain")

        store.save(fixture)
        loaded = store.load()

        self.assertTrue((store.root / config.GRAPH_CLASS_FILE_NAME).exists())
        assert loaded.graph_class is not None
        self.assertEqual(list(loaded.graph_class), list(fixture.graph_class or ()))
        self.assertEqual(loaded.star_graph, fixture.star_graph)
        self.assertIsNone(loaded.graph)

    def test_true_graph_kept_beside_graph_class(self) -> None:
        chain = chain_construction(3)
        outside = ManipulationGraph.from_arcs(chain.n, [(0, 1)])
        fixture = replace(chain, graph=outside, target_graph=None)

        save_fixture(fixture, self._root / "shifted")
        loaded = load_fixture(self._root / "shifted")

        self.assertEqual(loaded.star_graph, outside)
        self.assertIsNone(loaded.target_graph)
        self.assertEqual(list(loaded.graph_class or ()), list(chain.graph_class or ()))

    def test_column_class_kept_in_manifest(self) -> None:
        fixture = ug_online_lb_construction(3)
        store = FixtureStore(self._root / "columns")

        store.save(fixture)
        manifest = json.loads(store.manifest_path.read_text(encoding="utf-8"))
        loaded = store.load()

        self.assertEqual(manifest["graph_class_size"], 64)
        self.assertNotIn("graph_class", manifest["files"])
        self.assertEqual(loaded.graph_class, fixture.graph_class)
        self.assertEqual(loaded.target_graph, fixture.target_graph)

    def test_missing_manifest(self) -> None:
        with self.assertRaises(DataAccessError):
            load_fixture(self._root / "nothing")

    def test_manifest_without_class(self) -> None:
        store = FixtureStore(self._root)
        store.manifest_path.write_text('{"name": "x", "files": {}}', encoding="utf-8")

        with self.assertRaises(FixtureFormatError):
            store.load()


class TestLooseFiles(unittest.TestCase):
    @override
    def setUp(self) -> None:
        self._tmp: TemporaryDirectory[str] = TemporaryDirectory()
        self._root: Path = Path(self._tmp.name)

    @override
    def tearDown(self) -> None:
        self._tmp.cleanup()

    def test_load_graph_and_class(self) -> None:
        (self._root / "g.txt").write_text("n=2 k=1\n1\n", encoding="utf-8")
        (self._root / "h.txt").write_text("n=2\n01\n", encoding="utf-8")

        self.assertTrue(load_graph(self._root / "g.txt").has_arc(0, 1))
        self.assertEqual(len(load_class(self._root / "h.txt")), 1)

    def test_missing_file(self) -> None:
        with self.assertRaises(DataAccessError):
            load_graph(self._root / "absent.txt")


if __name__ == "__main__":
    unittest.main()
