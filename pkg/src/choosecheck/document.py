"""Graph files: ``{"version": 1, "rotation": {"<label>": ["<label>", ...]}}``.

Each rotation list is the clockwise neighbour order of its vertex.  Two
optional top-level fields are accepted: ``metadata`` (``name`` and
``source`` strings) and ``lists``, a list assignment ``{"<label>": [int,
...]}`` used by ad-hoc colouring queries.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .plane_graph import PlaneGraph, build_from_rotation
from .report import dumps

VERSION = 1
_TOP_LEVEL = ("version", "metadata", "rotation", "lists")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, field: str | None = None):
        self.line, self.column, self.field = line, column, field
        where = []
        if line is not None:
            where.append(f"line {line}" + (f", column {column}" if column is not None else ""))
        if field is not None:
            where.append(f"field {field}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True)
class GraphDocument:
    graph: PlaneGraph
    name: str | None = None
    source: str | None = None
    lists: dict | None = None


def _line_of(text: str, key: str, after: int = 0) -> tuple[int | None, int]:
    m = re.compile(re.escape(json.dumps(key)) + r"\s*:").search(text, after)
    if m is None:
        return None, after
    return text.count("\n", 0, m.start()) + 1, m.end()


def _fail(text, message, path: list[str]):
    # locate the innermost key of the path, searching after each outer key
    line, pos = None, 0
    for key in path:
        found, pos2 = _line_of(text, key, pos)
        if found is not None:
            line, pos = found, pos2
    field = path[0] + "".join(f"[{json.dumps(p)}]" for p in path[1:]) if path else None
    raise ParseError(message, line=line, field=field)


def parse_document(text: str) -> GraphDocument:
    """Parse and validate a graph file.  Syntax and schema problems raise
    :class:`ParseError`; an invalid embedding raises the plane-graph error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", line=1)
    for key in doc:
        if key not in _TOP_LEVEL:
            _fail(text, f"unknown field (expected one of {', '.join(_TOP_LEVEL)})", [key])
    if "version" not in doc:
        raise ParseError("missing required field", field="version")
    if doc["version"] != VERSION or isinstance(doc["version"], bool):
        _fail(text, f"unsupported version {doc['version']!r}, expected {VERSION}", ["version"])

    name = source = None
    meta = doc.get("metadata")
    if meta is not None:
        if not isinstance(meta, dict):
            _fail(text, "metadata must be an object", ["metadata"])
        for k, v in meta.items():
            if k not in ("name", "source") or not isinstance(v, str):
                _fail(text, "metadata accepts string fields name and source only", ["metadata", k])
        name, source = meta.get("name"), meta.get("source")

    if "rotation" not in doc:
        raise ParseError("missing required field", field="rotation")
    rot = doc["rotation"]
    if not isinstance(rot, dict) or not rot:
        _fail(text, "rotation must be a non-empty object", ["rotation"])
    for lab, nbrs in rot.items():
        if not isinstance(nbrs, list):
            _fail(text, "rotation entry must be a list of labels", ["rotation", lab])
        for j, w in enumerate(nbrs):
            if not isinstance(w, str):
                _fail(text, f"entry {j} is {w!r}; labels are strings", ["rotation", lab])
            if w not in rot:
                _fail(text, f"entry {j} refers to unknown vertex {w!r}", ["rotation", lab])

    lists = doc.get("lists")
    if lists is not None:
        if not isinstance(lists, dict):
            _fail(text, "lists must be an object", ["lists"])
        for lab, cs in lists.items():
            if lab not in rot:
                _fail(text, f"unknown vertex {lab!r}", ["lists", lab])
            if not isinstance(cs, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in cs):
                _fail(text, "a list must be an array of integer colours", ["lists", lab])
        lists = {lab: frozenset(cs) for lab, cs in lists.items()}

    return GraphDocument(build_from_rotation(rot), name, source, lists)


def read_document(path: str) -> GraphDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def graph_document(G: PlaneGraph, name: str | None = None, source: str | None = None) -> dict:
    doc: dict = {"version": VERSION}
    meta = {k: v for k, v in (("name", name), ("source", source)) if v is not None}
    if meta:
        doc["metadata"] = meta
    doc["rotation"] = {str(k): [str(w) for w in ws] for k, ws in G.rotation_by_label().items()}
    return doc


def dump_document(G: PlaneGraph, name: str | None = None, source: str | None = None) -> str:
    return dumps(graph_document(G, name, source))
