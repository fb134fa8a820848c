"""JSON graph documents.

Format: ``{"n": int, "edges": [[u, v], ...]}`` with optional
``"multiplicity": [[u, v, m], ...]`` (makes the document a multigraph),
``"sets": {name: [v, ...]}`` and ``"order": [v, ...]``. Unknown fields are
carried through in ``GraphDocument.extra``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from .graph import GraphError, Multigraph, SimpleGraph, VertexOrder

Graph = Union[SimpleGraph, Multigraph]


class GraphParseError(GraphError):
    """Raised for malformed graph documents."""


@dataclass
class GraphDocument:
    graph: Graph
    sets: Dict[str, List[int]] = field(default_factory=dict)
    order: Optional[VertexOrder] = None
    extra: Dict[str, Any] = field(default_factory=dict)


def to_dict(
    g: Graph,
    sets: Optional[Mapping[str, Sequence[int]]] = None,
    order: Optional[VertexOrder] = None,
    extra: Optional[Mapping[str, Any]] = None,
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"n": g.n}
    if isinstance(g, Multigraph):
        doc["edges"] = [list(p) for p in g.pairs()]
        doc["multiplicity"] = [[u, v, m] for (u, v), m in g.items()]
    else:
        doc["edges"] = [list(e) for e in g.edges()]
    if sets:
        doc["sets"] = {name: sorted(int(v) for v in members) for name, members in sorted(sets.items())}
    if order is not None:
        doc["order"] = list(order.sequence)
    if extra:
        for key, value in extra.items():
            doc.setdefault(key, value)
    return doc


def to_json(g: Graph, sets=None, order=None, extra=None) -> str:
    return json.dumps(to_dict(g, sets, order, extra), sort_keys=True)


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphParseError(f"{where}: expected integer, got {value!r}")
    return value


def _vertex(value: Any, n: int, where: str) -> int:
    v = _int(value, where)
    if not 0 <= v < n:
        raise GraphParseError(f"{where}: index out of range ({v} not in 0..{n - 1})")
    return v


def parse_document(doc: Any) -> GraphDocument:
    if not isinstance(doc, dict):
        raise GraphParseError("document must be a JSON object")
    if "n" not in doc:
        raise GraphParseError("missing field 'n'")
    n = _int(doc["n"], "n")
    if n < 0:
        raise GraphParseError(f"n: must be nonnegative, got {n}")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphParseError("edges: expected array")

    pairs = []
    seen = set()
    for i, e in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(e, list) or len(e) != 2:
            raise GraphParseError(f"{where}: expected a 2-element array, got {e!r}")
        u, v = _vertex(e[0], n, where), _vertex(e[1], n, where)
        if u == v:
            raise GraphParseError(f"{where}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"{where}: duplicate edge {list(key)}")
        seen.add(key)
        pairs.append(key)

    graph: Graph
    if "multiplicity" in doc:
        raw_mult = doc["multiplicity"]
        if not isinstance(raw_mult, list):
            raise GraphParseError("multiplicity: expected array")
        mult: Dict[tuple, int] = {}
        for i, entry in enumerate(raw_mult):
            where = f"multiplicity[{i}]"
            if not isinstance(entry, list) or len(entry) != 3:
                raise GraphParseError(f"{where}: expected [u, v, m], got {entry!r}")
            u, v = _vertex(entry[0], n, where), _vertex(entry[1], n, where)
            m = _int(entry[2], where)
            if u == v:
                raise GraphParseError(f"{where}: loop at vertex {u}")
            if m < 1:
                raise GraphParseError(f"{where}: multiplicity must be >= 1, got {m}")
            key = (min(u, v), max(u, v))
            if key in mult:
                raise GraphParseError(f"{where}: duplicate multiplicity entry for {list(key)}")
            mult[key] = m
        for key in pairs:
            mult.setdefault(key, 1)
        graph = Multigraph(n, mult)
    else:
        graph = SimpleGraph(n, pairs)

    sets: Dict[str, List[int]] = {}
    raw_sets = doc.get("sets", {})
    if not isinstance(raw_sets, dict):
        raise GraphParseError("sets: expected object")
    for name, members in raw_sets.items():
        if not isinstance(members, list):
            raise GraphParseError(f"sets[{name!r}]: expected array")
        sets[name] = sorted({_vertex(x, n, f"sets[{name!r}]") for x in members})

    order = None
    if "order" in doc:
        raw_order = doc["order"]
        if not isinstance(raw_order, list) or len(raw_order) != n:
            raise GraphParseError("order: expected a permutation of all vertices")
        try:
            order = VertexOrder(_vertex(x, n, "order") for x in raw_order)
        except GraphParseError:
            raise
        except GraphError as exc:
            raise GraphParseError(f"order: {exc}") from None

    known = {"n", "edges", "multiplicity", "sets", "order"}
    extra = {k: v for k, v in doc.items() if k not in known}
    return GraphDocument(graph, sets, order, extra)


def read_document(text: str) -> GraphDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    return parse_document(doc)


def from_json(text: str) -> Graph:
    return read_document(text).graph


def load(path: Union[str, Path]) -> GraphDocument:
    return read_document(Path(path).read_text(encoding="utf-8"))


def dump(path: Union[str, Path], g: Graph, sets=None, order=None, extra=None) -> None:
    Path(path).write_text(to_json(g, sets, order, extra) + "\n", encoding="utf-8")
