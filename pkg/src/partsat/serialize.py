"""Bit-exact graph JSON and DOT export.

The JSON object has the fixed field order ``k``, ``parts``, ``edges``, then
optionally ``X`` and ``provenance``:

* ``k`` -- number of parts;
* ``parts`` -- k arrays of vertex ids, each ascending;
* ``edges`` -- array of [u, v] pairs with u < v, sorted lexicographically;
* ``X`` -- optional transversal, one vertex id per part, in part order.

Identical graphs always serialize to identical bytes, so emitted files can be
diffed and hashed as golden values.
"""

from __future__ import annotations

import hashlib
import json

from .errors import InputError
from .graph import PartiteGraph, Transversal


def graph_to_obj(g: PartiteGraph, x: Transversal | None = None,
                 provenance: dict | None = None) -> dict:
    obj: dict = {
        "k": g.part_count,
        "parts": [list(part) for part in g.parts],
        "edges": [list(e) for e in g.edges()],
    }
    if x is not None:
        x.validate(g)
        obj["X"] = list(x.vertices)
    if provenance is not None:
        obj["provenance"] = provenance
    return obj


def graph_to_json(g: PartiteGraph, x: Transversal | None = None,
                  provenance: dict | None = None) -> str:
    return json.dumps(graph_to_obj(g, x, provenance), indent=2, sort_keys=False) + "\n"


def graph_from_obj(obj: dict) -> tuple[PartiteGraph, Transversal | None]:
    try:
        k = obj["k"]
        parts = obj["parts"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"graph object is missing field {exc}") from None
    if not isinstance(k, int) or not isinstance(parts, list) or len(parts) != k:
        raise InputError("'parts' must be an array of k arrays")
    g = PartiteGraph(parts, [tuple(e) for e in edges])
    x = None
    if "X" in obj and obj["X"] is not None:
        x = Transversal(obj["X"])
        x.validate(g)
    return g, x


def graph_from_json(text: str) -> tuple[PartiteGraph, Transversal | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return graph_from_obj(obj)


def graph_hash(g: PartiteGraph) -> str:
    """sha256 over the canonical JSON bytes (without X or provenance)."""
    return hashlib.sha256(graph_to_json(g).encode()).hexdigest()


def graph_to_dot(g: PartiteGraph, x: Transversal | None = None) -> str:
    """DOT text with one subgraph cluster per part."""
    xset = set(x.vertices) if x is not None else set()
    lines = ["graph partite {"]
    for p, part in enumerate(g.parts):
        lines.append(f"  subgraph cluster_{p} {{")
        lines.append(f'    label="part {p}";')
        for v in part:
            shape = ' [shape=box]' if v in xset else ""
            lines.append(f"    {v}{shape};")
        lines.append("  }")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
