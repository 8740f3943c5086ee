"""Reading clutters and graphs, and writing reports atomically.

Accepted clutter formats:

* JSON ``{"vertices": [str, ...], "edges": [[str, ...], ...]}``
* plain text: the first line lists vertex names separated by whitespace, and
  every later nonblank line lists the members of one edge.

Graphs use ``"adjacency": [[u, v], ...]`` in place of ``"edges"``, or one
``u v`` pair per line in the text form.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path

from .clutter import Clutter, Graph, make_clutter, make_graph
from .errors import ClutterError

SCHEMA_VERSION = 1


def read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ClutterError(f"cannot read {path}: {exc.strerror}") from None


def _string_list(value: object, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ClutterError(f"{what} must be a list of strings")
    return value


def _parse_json(text: str, key: str) -> tuple[list[str], list[list[str]]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ClutterError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data or key not in data:
        raise ClutterError(f'expected an object with "vertices" and "{key}"')
    vertices = _string_list(data["vertices"], '"vertices"')
    if not isinstance(data[key], list):
        raise ClutterError(f'"{key}" must be a list')
    rows = [_string_list(row, f'each entry of "{key}"') for row in data[key]]
    return vertices, rows


def _parse_text(text: str) -> tuple[list[str], list[list[str]]]:
    lines = [ln.split() for ln in text.splitlines()]
    if not lines:
        raise ClutterError("empty input")
    vertices, rest = lines[0], [ln for ln in lines[1:] if ln]
    return vertices, rest


def _split(text: str, key: str) -> tuple[list[str], list[list[str]]]:
    if text.lstrip().startswith("{"):
        return _parse_json(text, key)
    return _parse_text(text)


def parse_clutter(text: str) -> Clutter:
    vertices, edges = _split(text, "edges")
    return make_clutter(vertices, edges)


def parse_graph(text: str) -> Graph:
    vertices, pairs = _split(text, "adjacency")
    return make_graph(vertices, pairs)


def load_clutter(path: str) -> Clutter:
    return parse_clutter(read_source(path))


def load_graph(path: str) -> Graph:
    return parse_graph(read_source(path))


def clutter_json(C: Clutter) -> dict:
    out: dict = {"vertices": list(C.ground), "edges": C.edge_names()}
    if C.improper:
        out["improper"] = True
    return out


def graph_json(G: Graph) -> dict:
    return {
        "vertices": list(G.ground),
        "adjacency": [[G.ground[u], G.ground[v]] for u, v in G.edge_list()],
    }


def clutter_text(C: Clutter) -> str:
    lines = [" ".join(C.ground)]
    lines.extend(" ".join(C.names(e)) for e in C.edges)
    return "\n".join(lines) + "\n"


def write_output(text: str, out: str | None) -> None:
    """Print to stdout, or write ``out`` via a temporary file and an atomic rename."""
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
