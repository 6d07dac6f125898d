"""JSON graph files, shipped fixtures and topology reports.

A graph file looks like::

    {"template": "default",
     "vertices": 2,
     "edges": [{"id": "e0", "ends": [[0, 0], [1, 1]]}, ...],
     "flags": [[v, leg], ...],
     "passive": ["e2"]}

``template`` is either a template name or an inline template table.
Unknown fields are rejected.  Serialization uses sorted keys, so
``serialize(parse(text))`` is byte-stable.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import ParseError
from .stranded import (DEFAULT_TEMPLATE, StrandEdge, StrandedGraph, VertexTemplate, find_coloring)

TEMPLATES: Dict[str, VertexTemplate] = {"default": DEFAULT_TEMPLATE}
FIXTURES = ("fig8", "fig12")

_TOP_FIELDS = {"template", "vertices", "edges", "flags", "passive"}
_EDGE_FIELDS = {"id", "ends"}


def _leg(value: Any, where: str) -> Tuple[int, int]:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)):
        raise ParseError(f"{where}: expected [vertex, leg], got {value!r}")
    return value[0], value[1]


def _edge_id(value: Any, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{where}: edge id must be a string or integer, got {value!r}")
    return value


def graph_from_dict(doc: Any, source: str = "<graph>") -> StrandedGraph:
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object")
    extra = set(doc) - _TOP_FIELDS
    if extra:
        raise ParseError(f"{source}: unknown fields {sorted(extra)}")
    if "vertices" not in doc:
        raise ParseError(f"{source}: missing field 'vertices'")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"{source}: field 'vertices' must be a nonnegative integer, got {n!r}")

    tpl = doc.get("template", "default")
    if isinstance(tpl, str):
        if tpl not in TEMPLATES:
            raise ParseError(f"{source}: field 'template': unknown template {tpl!r}")
        template = TEMPLATES[tpl]
    elif isinstance(tpl, dict):
        # structure and orientability errors pass through with their own context
        template = VertexTemplate.from_dict(tpl)
    else:
        raise ParseError(f"{source}: field 'template' must be a name or a table")

    edges = []
    seen = set()
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError(f"{source}: field 'edges' must be a list")
    for i, rec in enumerate(raw_edges):
        where = f"{source}: edges[{i}]"
        if not isinstance(rec, dict):
            raise ParseError(f"{where}: expected an object")
        extra = set(rec) - _EDGE_FIELDS
        if extra:
            raise ParseError(f"{where}: unknown fields {sorted(extra)}")
        if "id" not in rec or "ends" not in rec:
            raise ParseError(f"{where}: needs 'id' and 'ends'")
        eid = _edge_id(rec["id"], f"{where}.id")
        if eid in seen:
            raise ParseError(f"{where}.id: duplicate edge id {eid!r}")
        seen.add(eid)
        ends = rec["ends"]
        if not isinstance(ends, list) or len(ends) != 2:
            raise ParseError(f"{where}.ends: expected two [vertex, leg] pairs")
        edges.append(StrandEdge(eid, _leg(ends[0], f"{where}.ends[0]"), _leg(ends[1], f"{where}.ends[1]")))

    raw_flags = doc.get("flags", [])
    if not isinstance(raw_flags, list):
        raise ParseError(f"{source}: field 'flags' must be a list")
    flags = tuple(_leg(f, f"{source}: flags[{i}]") for i, f in enumerate(raw_flags))

    raw_passive = doc.get("passive", [])
    if not isinstance(raw_passive, list):
        raise ParseError(f"{source}: field 'passive' must be a list")
    passive = set()
    for i, p in enumerate(raw_passive):
        pid = _edge_id(p, f"{source}: passive[{i}]")
        if pid not in seen:
            raise ParseError(f"{source}: passive[{i}]: {pid!r} is not an edge id")
        passive.add(pid)
    return StrandedGraph(n, tuple(edges), flags, frozenset(passive), template)


def parse(text: str, source: str = "<graph>") -> StrandedGraph:
    """Parse and validate a graph document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return graph_from_dict(doc, source)


def load(path: Union[str, Path]) -> StrandedGraph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    return parse(text, str(path))


def graph_to_dict(G: StrandedGraph) -> dict:
    named = [k for k, t in TEMPLATES.items() if t == G.template]
    order = {e: i for i, e in enumerate(G.edge_ids)}
    return {
        "template": named[0] if named else G.template.to_dict(),
        "vertices": G.vertex_count,
        "edges": [{"id": e.id, "ends": [list(e.a), list(e.b)]} for e in G.edges],
        "flags": [list(f) for f in G.flags],
        "passive": sorted(G.passive, key=order.__getitem__),
    }


def serialize(G: StrandedGraph) -> str:
    return json.dumps(graph_to_dict(G), sort_keys=True, indent=2) + "\n"


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    return Path(str(resources.files("tensorpoly") / "fixtures" / f"{name}.json"))


def load_fixture(name: str) -> StrandedGraph:
    return load(fixture_path(name))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class Report:
    vertices: int
    edges_active: int
    edges_passive: int
    flags: int
    components: int
    rank: int
    nullity: int
    jacket_faces: int
    jacket_genus: int
    bubble_count: int
    bubbles: List[Dict[str, Any]] = field(default_factory=list)
    genus_sum: int = 0
    colorable: bool = False
    edge_colors: Optional[Dict[str, int]] = None
    manifold: str = "manifold"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [
            f"vertices        {self.vertices}",
            f"edges           {self.edges_active} active, {self.edges_passive} passive",
            f"flags           {self.flags}",
            f"k / r / n       {self.components} / {self.rank} / {self.nullity}",
            f"jacket          F={self.jacket_faces} genus={self.jacket_genus}",
            f"bubbles         {self.bubble_count}",
        ]
        for b in self.bubbles:
            state = "" if b["closed"] else " (open)"
            lines.append(f"  b{b['index']}  V={b['V']} E={b['E']} F={b['F']} g={b['g']}{state}")
        lines += [
            f"genus sum       {self.genus_sum}",
            f"colorable       {'yes' if self.colorable else 'no'}",
            f"dual            {self.manifold.replace('_', '-')}",
        ]
        return "\n".join(lines)


def report(G: StrandedGraph) -> Report:
    M = G.underlying_multigraph()
    J = G.jacket()
    bubbles = G.bubbles()
    col = find_coloring(G)
    return Report(
        vertices=G.vertex_count,
        edges_active=len(G.active),
        edges_passive=len(G.passive),
        flags=len(G.flags),
        components=M.components(),
        rank=M.rank(),
        nullity=M.nullity(),
        jacket_faces=J.face_count(),
        jacket_genus=J.genus(),
        bubble_count=len(bubbles),
        bubbles=[{"index": b.id, "V": b.signature[0], "E": b.signature[1], "F": b.signature[2],
                  "g": b.genus, "closed": b.closed} for b in bubbles],
        genus_sum=bubbles.genus_sum(),
        colorable=col is not None,
        edge_colors=None if col is None else {str(e): c for e, c in col.edge_colors.items()},
        manifold=G.is_manifold_dual(),
    )
