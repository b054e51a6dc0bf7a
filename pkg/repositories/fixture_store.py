"""Fixture directories: graph, class and graph-class files plus a manifest."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from os import PathLike
from pathlib import Path

import config
from api.constructions.models import ColumnChoiceGraphClass, Fixture
from api.exceptions import DataAccessError, FixtureFormatError
from api.graphs import GraphClass, ManipulationGraph
from api.hypotheses import HypothesisClass
from utils.json_types import JsonObject, field_int, field_int_list, field_str
from utils.json_utils import load_json, save_json

from .fixture_codec import (
    decode_class,
    decode_graph,
    decode_graph_class,
    encode_class,
    encode_graph,
    encode_graph_class,
)

logger = logging.getLogger(__name__)


def read_text(path: Path, encoding: str = config.ENCODING) -> str:
    try:
        return path.read_text(encoding=encoding)
    except OSError as e:
        raise DataAccessError(
            f"Cannot read {path}: {e}", user_message=f"Cannot read {path}"
        ) from e


def load_graph(path: str | PathLike[str]) -> ManipulationGraph:
    path = Path(path)
    return decode_graph(read_text(path), source=str(path))


def load_class(path: str | PathLike[str]) -> HypothesisClass:
    path = Path(path)
    return decode_class(read_text(path), source=str(path))


def _columns_to_json(graphs: ColumnChoiceGraphClass) -> JsonObject:
    return {
        "sources": list(graphs.sources),
        "candidates": [list(c) for c in graphs.candidates],
        "k": graphs.declared_k,
    }


def _columns_from_json(data: JsonObject, n: int, source: str) -> ColumnChoiceGraphClass:
    sources = field_int_list(data, "sources")
    raw = data.get("candidates")
    k = field_int(data, "k")
    if sources is None or k is None or not isinstance(raw, list):
        raise FixtureFormatError(f"{source}: malformed column-choice graph class")
    candidates: list[tuple[int, ...]] = []
    for column in raw:
        if not isinstance(column, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in column
        ):
            raise FixtureFormatError(f"{source}: candidate lists must hold vertex ids")
        candidates.append(tuple(v for v in column if isinstance(v, int)))
    return ColumnChoiceGraphClass(n, tuple(sources), tuple(candidates), k)


@dataclass(frozen=True, slots=True)
class FixtureStore:
    """Reads and writes one fixture per directory."""

    root: Path
    encoding: str = config.ENCODING

    @property
    def manifest_path(self) -> Path:
        return self.root / config.MANIFEST_FILE_NAME

    def save(self, fixture: Fixture) -> list[Path]:
        """Write every file of the fixture; returns the paths written."""
        self.root.mkdir(parents=True, exist_ok=True)
        written: list[Path] = []
        files: JsonObject = {"class": config.CLASS_FILE_NAME}
        class_path = self.root / config.CLASS_FILE_NAME
        class_path.write_text(encode_class(fixture.cls), encoding=self.encoding)
        written.append(class_path)

        has_graph = fixture.graph is not None or fixture.target_graph is not None
        if has_graph:
            graph_path = self.root / config.GRAPH_FILE_NAME
            graph_path.write_text(
                encode_graph(fixture.star_graph), encoding=self.encoding
            )
            files["graph"] = config.GRAPH_FILE_NAME
            written.append(graph_path)

        manifest: JsonObject = {
            "name": fixture.name,
            "n": fixture.n,
            "k": fixture.degree_bound,
            "class_size": len(fixture.cls),
            "params": dict(fixture.params),
            "vertex_names": list(fixture.vertex_names),
            "target": fixture.target,
            "target_graph": fixture.target_graph,
            "files": files,
        }
        match fixture.graph_class:
            case ColumnChoiceGraphClass() as columns:
                manifest["graph_class"] = _columns_to_json(columns)
                manifest["graph_class_size"] = len(columns)
            case GraphClass() as graphs:
                graphs_path = self.root / config.GRAPH_CLASS_FILE_NAME
                graphs_path.write_text(
                    encode_graph_class(graphs), encoding=self.encoding
                )
                files["graph_class"] = config.GRAPH_CLASS_FILE_NAME
                manifest["graph_class_size"] = len(graphs)
                written.append(graphs_path)
            case None:
                pass

        save_json(self.manifest_path, manifest, encoding=self.encoding)
        written.append(self.manifest_path)
        logger.info("Saved fixture %r to %s", fixture.name, self.root)
        return written

    def load(self) -> Fixture:
        manifest = load_json(self.manifest_path, self.encoding)
        source = str(self.manifest_path)
        name = field_str(manifest, "name")
        files = manifest.get("files")
        if name is None or not isinstance(files, dict):
            raise FixtureFormatError(f"{source}: manifest needs a name and files")

        class_file = files.get("class")
        if not isinstance(class_file, str):
            raise FixtureFormatError(f"{source}: manifest lists no class file")
        cls = load_class(self.root / class_file)

        graph: ManipulationGraph | None = None
        graph_file = files.get("graph")
        graph_class: GraphClass | ColumnChoiceGraphClass | None = None
        if isinstance(files.get("graph_class"), str):
            graph_class = decode_graph_class(
                read_text(self.root / str(files["graph_class"]), self.encoding),
                source=str(self.root / str(files["graph_class"])),
            )
        elif isinstance(columns := manifest.get("graph_class"), dict):
            graph_class = _columns_from_json(columns, cls.n, source)
        target_graph = field_int(manifest, "target_graph")
        # A graph file next to a class without target_graph is a true graph outside it.
        if isinstance(graph_file, str) and (graph_class is None or target_graph is None):
            graph = load_graph(self.root / graph_file)

        names = manifest.get("vertex_names")
        vertex_names = (
            tuple(str(v) for v in names)
            if isinstance(names, list)
            else tuple(str(x) for x in range(cls.n))
        )
        params = manifest.get("params")
        return Fixture(
            name=name,
            cls=cls,
            vertex_names=vertex_names,
            graph=graph,
            graph_class=graph_class,
            target=field_int(manifest, "target"),
            target_graph=target_graph,
            params=(
                {k: v for k, v in params.items() if isinstance(v, int)}
                if isinstance(params, dict)
                else {}
            ),
        )


def load_fixture(path: str | PathLike[str]) -> Fixture:
    return FixtureStore(Path(path)).load()


def save_fixture(fixture: Fixture, out_dir: str | PathLike[str]) -> list[Path]:
    return FixtureStore(Path(out_dir)).save(fixture)
