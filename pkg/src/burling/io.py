"""Serialization: graph/graft JSON, DOT export, witness JSON, op scripts.

The JSON graph format is deliberately tiny::

    {"edges": [[0, 1], [1, 2]], "n": 3, "tips": [0, 2]}

``n`` and ``edges`` are required; ``tips`` and ``name`` are optional.
Edges are stored with u < v and sorted lexicographically, keys sorted,
one key per line, so equal objects serialize to identical bytes.
"""

from __future__ import annotations

import json
import shlex
from typing import TextIO

from .graph import Graph, Graft
from .witness import Witness
from .errors import FormatError

__all__ = [
    "graph_to_json", "graph_from_json",
    "dump_graph", "load_graph", "dump_graft", "load_graft",
    "graph_to_dot", "witness_doc", "witness_to_json", "witness_from_json",
    "format_script", "parse_script",
]

_GRAPH_KEYS = {"n", "edges", "tips", "name"}


def graph_to_json(g: Graph, tips: frozenset[int] | None = None,
                  name: str | None = None) -> str:
    """Byte-stable JSON text for a graph (graft when tips is given)."""
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if tips is not None:
        doc["tips"] = sorted(tips)
    if name is not None:
        doc["name"] = name
    lines = (f" {json.dumps(k)}: {json.dumps(doc[k])}" for k in sorted(doc))
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _parse_doc(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top level must be a JSON object")
    unknown = set(doc) - _GRAPH_KEYS
    if unknown:
        raise FormatError(f"unknown keys: {sorted(unknown)}")
    for key in ("n", "edges"):
        if key not in doc:
            raise FormatError(f"missing required key {key!r}")
    if not isinstance(doc["n"], int) or isinstance(doc["n"], bool) or doc["n"] < 0:
        raise FormatError("'n' must be a non-negative integer")
    if not isinstance(doc["edges"], list):
        raise FormatError("'edges' must be a list")
    return doc


def _parse_edges(doc: dict) -> list[tuple[int, int]]:
    out = []
    for item in doc["edges"]:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise FormatError(f"bad edge entry: {item!r}")
        out.append((item[0], item[1]))
    return out


def graph_from_json(text: str) -> tuple[Graph, frozenset[int] | None, str | None]:
    """Parse graph JSON; returns (graph, tips or None, name or None)."""
    doc = _parse_doc(text)
    n = doc["n"]
    try:
        g = Graph.from_edges(n, _parse_edges(doc))
    except Exception as exc:
        raise FormatError(f"bad graph data: {exc}") from exc
    tips = None
    if "tips" in doc:
        if (not isinstance(doc["tips"], list)
                or not all(isinstance(t, int) and not isinstance(t, bool) for t in doc["tips"])):
            raise FormatError("'tips' must be a list of integers")
        tips = frozenset(doc["tips"])
        bad = [t for t in tips if not 0 <= t < n]
        if bad:
            raise FormatError(f"tips out of range: {sorted(bad)}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("'name' must be a string")
    return g, tips, name


def dump_graph(g: Graph, fh: TextIO, name: str | None = None) -> None:
    fh.write(graph_to_json(g, None, name))


def load_graph(fh: TextIO) -> Graph:
    g, _tips, _name = graph_from_json(fh.read())
    return g


def dump_graft(gr: Graft, fh: TextIO, name: str | None = None) -> None:
    fh.write(graph_to_json(gr.graph, gr.tips, name))


def load_graft(fh: TextIO) -> Graft:
    g, tips, _name = graph_from_json(fh.read())
    if tips is None:
        raise FormatError("graft file must carry a 'tips' key")
    return Graft(g, tips)


def graph_to_dot(g: Graph, tips: frozenset[int] | None = None,
                 name: str = "G") -> str:
    """GraphViz text; tip vertices render as boxes."""
    lines = [f"graph {json.dumps(name)} {{"]
    tips = tips or frozenset()
    for v in range(g.n):
        shape = "box" if v in tips else "circle"
        lines.append(f'  {v} [shape={shape}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_WITNESS_KEYS = {"kind", "vertices", "center", "k", "hits", "paths"}


def witness_doc(w: Witness) -> dict:
    """Plain-dict form of a witness; defaults are omitted."""
    doc: dict = {"kind": w.kind, "vertices": list(w.vertices)}
    if w.center is not None:
        doc["center"] = w.center
    if w.k:
        doc["k"] = w.k
    if w.hits:
        doc["hits"] = list(w.hits)
    if w.paths:
        doc["paths"] = [list(p) for p in w.paths]
    return doc


def witness_to_json(w: Witness) -> str:
    return json.dumps(witness_doc(w), sort_keys=True, indent=1) + "\n"


def witness_from_json(text: str) -> Witness:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top level must be a JSON object")
    unknown = set(doc) - _WITNESS_KEYS
    if unknown:
        raise FormatError(f"unknown keys: {sorted(unknown)}")
    if "kind" not in doc or "vertices" not in doc:
        raise FormatError("witness needs 'kind' and 'vertices'")
    try:
        return Witness(
            kind=doc["kind"],
            vertices=tuple(doc["vertices"]),
            center=doc.get("center"),
            k=doc.get("k", 0),
            hits=tuple(doc.get("hits", ())),
            paths=tuple(tuple(p) for p in doc.get("paths", ())),
        )
    except Exception as exc:
        raise FormatError(f"bad witness data: {exc}") from exc


def format_script(ops: list) -> str:
    """Render a list of op descriptors to script text.

    Each descriptor is a tuple: ("pendent", t), ("clone", t), or
    ("join", xs, path) where path names a side-graft file.
    """
    lines = []
    for desc in ops:
        if desc[0] == "pendent":
            lines.append(f"pendent {desc[1]}")
        elif desc[0] == "clone":
            lines.append(f"clone {desc[1]}")
        elif desc[0] == "join":
            xs = " ".join(str(x) for x in desc[1])
            lines.append(f"join {xs} @{desc[2]}")
        else:
            raise FormatError(f"unknown op {desc[0]!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_script(text: str) -> list:
    """Parse script text back to op descriptors (inverse of format_script).

    Grammar, one op per line, ``#`` starts a comment::

        pendent <t>
        clone <t>
        join <x1> <x2> ... @<graft-file>
    """
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            parts = shlex.split(line)
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        verb = parts[0]
        if verb in ("pendent", "clone"):
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: {verb} takes one vertex")
            try:
                ops.append((verb, int(parts[1])))
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex {parts[1]!r}") from None
        elif verb == "join":
            if len(parts) < 3 or not parts[-1].startswith("@"):
                raise FormatError(
                    f"line {lineno}: join needs vertices then @<graft-file>")
            try:
                xs = tuple(int(p) for p in parts[1:-1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex list") from None
            ops.append(("join", xs, parts[-1][1:]))
        else:
            raise FormatError(f"line {lineno}: unknown op {verb!r}")
    return ops
