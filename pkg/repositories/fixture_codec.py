"""Text formats for graphs, graph classes and hypothesis classes.

Graph file: header `n=<int> k=<int>`, then line i lists the out-neighbors of
vertex i separated by spaces (an empty line means no arcs). A graph-class
file has the header `n=<int> k=<int> m=<int>` followed by m such blocks of n
lines. Class file: header `n=<int>`, then one bit-string of length n per line.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

from api.exceptions import FixtureFormatError, ValidationError
from api.graphs import GraphClass, ManipulationGraph
from api.hypotheses import HypothesisClass

_HEADER_FIELD = re.compile(r"^([a-z]+)=(\d+)$")


def _parse_header(line: str, expected: Sequence[str], source: str) -> dict[str, int]:
    fields: dict[str, int] = {}
    for token in line.split():
        match = _HEADER_FIELD.match(token)
        if match is None:
            raise FixtureFormatError(f"{source}: bad header token {token!r}")
        fields[match.group(1)] = int(match.group(2))
    if sorted(fields) != sorted(expected):
        raise FixtureFormatError(
            f"{source}: header must be {' '.join(f'{f}=<int>' for f in expected)}, "
            f"got {line!r}"
        )
    return fields


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _encode_rows(graph: ManipulationGraph) -> list[str]:
    return [" ".join(map(str, graph.neighbors(x))) for x in range(graph.n)]


def _decode_rows(
    rows: Sequence[str], k: int, source: str, offset: int = 1
) -> ManipulationGraph:
    parsed: list[list[int]] = []
    for i, row in enumerate(rows):
        try:
            parsed.append([int(token) for token in row.split()])
        except ValueError:
            raise FixtureFormatError(
                f"{source}: line {i + offset + 1} is not a list of vertex ids"
            ) from None
    try:
        return ManipulationGraph.from_rows(parsed, declared_k=k)
    except ValidationError as e:
        raise FixtureFormatError(f"{source}: {e}") from e


def encode_graph(graph: ManipulationGraph) -> str:
    lines = [f"n={graph.n} k={graph.declared_k}", *_encode_rows(graph)]
    return "\n".join(lines) + "\n"


def decode_graph(text: str, source: str = "graph") -> ManipulationGraph:
    lines = _lines(text)
    if not lines:
        raise FixtureFormatError(f"{source}: empty file")
    header = _parse_header(lines[0], ("n", "k"), source)
    n, k = header["n"], header["k"]
    rows = lines[1:]
    if len(rows) > n:
        raise FixtureFormatError(f"{source}: {len(rows)} rows for n={n}")
    rows += [""] * (n - len(rows))
    return _decode_rows(rows, k, source)


def encode_graph_class(graphs: Iterable[ManipulationGraph]) -> str:
    members = list(graphs)
    if not members:
        raise ValidationError("Cannot encode an empty graph class")
    first = members[0]
    lines = [f"n={first.n} k={first.declared_k} m={len(members)}"]
    for graph in members:
        lines.extend(_encode_rows(graph))
    return "\n".join(lines) + "\n"


def decode_graph_class(text: str, source: str = "graphs") -> GraphClass:
    lines = _lines(text)
    if not lines:
        raise FixtureFormatError(f"{source}: empty file")
    header = _parse_header(lines[0], ("n", "k", "m"), source)
    n, k, m = header["n"], header["k"], header["m"]
    body = lines[1:]
    if len(body) > n * m:
        raise FixtureFormatError(f"{source}: {len(body)} rows for {m} graphs of n={n}")
    body += [""] * (n * m - len(body))
    members = tuple(
        _decode_rows(body[i * n : (i + 1) * n], k, source, offset=1 + i * n)
        for i in range(m)
    )
    try:
        return GraphClass(members)
    except ValidationError as e:
        raise FixtureFormatError(f"{source}: {e}") from e


def encode_class(cls: HypothesisClass) -> str:
    lines = [f"n={cls.n}", *(h.bits() for h in cls)]
    return "\n".join(lines) + "\n"


def decode_class(text: str, source: str = "class") -> HypothesisClass:
    lines = [line.strip() for line in _lines(text)]
    if not lines:
        raise FixtureFormatError(f"{source}: empty file")
    n = _parse_header(lines[0], ("n",), source)["n"]
    rows = [line for line in lines[1:] if line]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FixtureFormatError(
                f"{source}: hypothesis {i} has {len(row)} labels, expected {n}"
            )
    try:
        return HypothesisClass.from_bits(rows)
    except ValidationError as e:
        raise FixtureFormatError(f"{source}: {e}") from e
