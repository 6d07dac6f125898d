"""Three-dimensional stranded (GFT tensor) graphs.

Every vertex is a copy of one :class:`VertexTemplate`, a tetrahedron seen
from its dual: the four legs are the faces of the tetrahedron, the three
strand slots of leg ``f`` are the tetrahedron edges of face ``f`` (labelled
by 2-subsets of ``{0, 1, 2, 3} - {f}``), and the four corners are the
tetrahedron vertices.  An edge glues two faces; the template's gluing table
says which corner of one face lands on which corner of the other, and the
strand slots follow.

Bubbles are built by the corner construction: every corner becomes a
3-valent ribbon vertex whose half-edges are the three legs around it, and
each edge in the subgraph glues three corner pairs.  Half-edges whose leg is
a flag or an edge outside the subgraph stay open and are stepped over by
the boundary walk, so they change neither faces nor genus.

A bubble is closed when every vertex carrying one of its corners has all
four legs glued inside the subgraph.  Only closed bubbles enter genus sums;
a bubble reaching a vertex with an open leg is an open region and counts as
planar.

The jacket is the ribbon graph whose rotation at every vertex is the
template's cyclic leg order.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphInputError, OperationError, OrientabilityError, StructureError
from .graph import BRIDGE, REGULAR, SELF_LOOP, DisjointSet, Multigraph
from .ribbon import RibbonGraph

LEGS = (0, 1, 2, 3)
Leg = Tuple[int, int]  # (vertex, leg)


def _complement(*xs) -> FrozenSet[int]:
    return frozenset(LEGS) - set(xs)


# ---------------------------------------------------------------------------
# vertex template
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexTemplate:
    """Strand routing of the 4-valent vertex, as data.

    ``slots[f]`` lists the labels of leg ``f``'s three slots in slot order,
    ``corner_order[c]`` is the cyclic order of legs around corner ``c`` and
    ``gluing[(l, m)]`` maps the corners of face ``l`` to those of face ``m``
    when leg ``l`` is glued to leg ``m``.
    """

    name: str
    leg_order: Tuple[int, ...]
    slots: Mapping[int, Tuple[FrozenSet[int], ...]]
    corner_order: Mapping[int, Tuple[int, ...]]
    gluing: Mapping[Tuple[int, int], Mapping[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "leg_order", tuple(self.leg_order))
        object.__setattr__(self, "slots", {int(f): tuple(frozenset(s) for s in v) for f, v in self.slots.items()})
        object.__setattr__(self, "corner_order", {int(c): tuple(v) for c, v in self.corner_order.items()})
        object.__setattr__(self, "gluing", {(int(l), int(m)): {int(a): int(b) for a, b in mp.items()}
                                            for (l, m), mp in self.gluing.items()})

    def __hash__(self):
        return hash((self.name, self.leg_order))

    # -- derived tables ----------------------------------------------------
    def leg_position(self, leg: int) -> int:
        return self.leg_order.index(leg)

    def slot_of(self, leg: int, label: Iterable[int]) -> int:
        label = frozenset(label)
        for s, lab in enumerate(self.slots[leg]):
            if lab == label:
                return s
        raise StructureError(f"template {self.name!r}: leg {leg} has no slot labelled {sorted(label)}")

    def segment(self, leg: int, slot: int) -> Tuple[int, int]:
        """Other end ``(leg, slot)`` of the internal strand segment."""
        label = self.slots[leg][slot]
        (other,) = _complement(*label) - {leg}
        return other, self.slot_of(other, label)

    def corner_slots(self, leg: int, corner: int) -> Tuple[int, int]:
        return tuple(s for s, lab in enumerate(self.slots[leg]) if corner in lab)

    def slot_matching(self, l: int, m: int) -> Tuple[int, int, int]:
        """Slot bijection across an edge gluing leg ``l`` to leg ``m``."""
        cm = self.gluing[(l, m)]
        return tuple(self.slot_of(m, {cm[a] for a in lab}) for lab in self.slots[l])

    def _pred(self, c: int, f: int) -> int:
        order = self.corner_order[c]
        return order[(order.index(f) - 1) % 3]

    def _succ(self, c: int, f: int) -> int:
        order = self.corner_order[c]
        return order[(order.index(f) + 1) % 3]

    # -- validation --------------------------------------------------------
    def validate(self) -> None:
        name = self.name
        if sorted(self.leg_order) != list(LEGS):
            raise StructureError(f"template {name!r}: leg order {self.leg_order} is not a permutation of 0..3")
        if sorted(self.slots) != list(LEGS):
            raise StructureError(f"template {name!r}: slots must be given for legs 0..3")
        for f in LEGS:
            labels = self.slots[f]
            want = {frozenset(p) for p in itertools.combinations(sorted(_complement(f)), 2)}
            if len(labels) != 3 or set(labels) != want:
                raise StructureError(f"template {name!r}: leg {f} slots {[sorted(s) for s in labels]} "
                                     f"are not the 2-subsets of {sorted(_complement(f))}")
        for c in LEGS:
            if sorted(self.corner_order.get(c, ())) != sorted(_complement(c)):
                raise StructureError(f"template {name!r}: corner {c} must list legs {sorted(_complement(c))}")
        for l in LEGS:
            for m in LEGS:
                cm = self.gluing.get((l, m))
                if cm is None:
                    raise StructureError(f"template {name!r}: missing gluing for legs ({l}, {m})")
                if set(cm) != _complement(l) or set(cm.values()) != _complement(m):
                    raise StructureError(f"template {name!r}: gluing ({l}, {m}) is not a bijection "
                                         f"from face {l} to face {m}")
        for l in LEGS:
            for m in LEGS:
                fwd, back = self.gluing[(l, m)], self.gluing[(m, l)]
                if any(back[fwd[c]] != c for c in fwd):
                    raise StructureError(f"template {name!r}: gluings ({l}, {m}) and ({m}, {l}) are not inverse")
        # a strand running along corner c into leg l must leave leg m on the
        # side that the corner rotation of the image corner continues with;
        # failing this means the gluing twists the face (orientation-preserving)
        for (l, m), cm in self.gluing.items():
            for c in _complement(l):
                incoming = {cm[a] for a in _complement(l, self._pred(c, l))}
                outgoing = _complement(m, self._succ(cm[c], m))
                if incoming != outgoing:
                    raise OrientabilityError(
                        f"template {name!r}: gluing leg {l} to leg {m} twists corner {c} "
                        f"(orientation-preserving face identification)")

    # -- serialization -----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "leg_order": list(self.leg_order),
            "slots": {str(f): [sorted(s) for s in self.slots[f]] for f in sorted(self.slots)},
            "corner_order": {str(c): list(self.corner_order[c]) for c in sorted(self.corner_order)},
            "gluing": {f"{l},{m}": {str(a): b for a, b in sorted(cm.items())}
                       for (l, m), cm in sorted(self.gluing.items())},
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "VertexTemplate":
        allowed = {"name", "leg_order", "slots", "corner_order", "gluing"}
        extra = set(d) - allowed
        if extra:
            raise StructureError(f"unknown template fields {sorted(extra)}")
        try:
            gluing = {}
            for key, cm in d["gluing"].items():
                l, m = (int(x) for x in key.split(","))
                gluing[(l, m)] = {int(a): int(b) for a, b in cm.items()}
            t = cls(name=str(d.get("name", "inline")), leg_order=tuple(d["leg_order"]),
                    slots={int(f): tuple(frozenset(s) for s in v) for f, v in d["slots"].items()},
                    corner_order={int(c): tuple(v) for c, v in d["corner_order"].items()},
                    gluing=gluing)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise StructureError(f"malformed template table: {exc}") from exc
        t.validate()
        return t


def _label_preserving_gluing(l: int, m: int) -> Dict[int, int]:
    # faces l and m are identified by swapping the labels l and m; a face
    # glued to its own label is reflected through the corner opposite to it
    # in the leg cycle so that the identification still reverses orientation
    if l != m:
        swap = {l: m, m: l}
        return {c: swap.get(c, c) for c in _complement(l)}
    a, b, c = (l + 1) % 4, (l + 2) % 4, (l + 3) % 4
    return {a: c, b: b, c: a}


def default_template() -> VertexTemplate:
    legs = LEGS
    slots = {}
    for i, f in enumerate(legs):
        prev, opp, nxt = legs[(i - 1) % 4], legs[(i + 2) % 4], legs[(i + 1) % 4]
        # slot order: outer strand to the previous leg, inner strand, outer strand to the next leg
        slots[f] = (_complement(f, prev), _complement(f, opp), _complement(f, nxt))
    corner_order = {}
    for c in legs:
        ring = tuple((c + k) % 4 for k in (1, 2, 3))
        corner_order[c] = ring if c % 2 == 0 else ring[::-1]
    gluing = {(l, m): _label_preserving_gluing(l, m) for l in legs for m in legs}
    t = VertexTemplate("default", legs, slots, corner_order, gluing)
    t.validate()
    return t


DEFAULT_TEMPLATE = default_template()


# ---------------------------------------------------------------------------
# stranded graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrandEdge:
    id: Hashable
    a: Leg
    b: Leg

    @property
    def ends(self) -> Tuple[Leg, Leg]:
        return self.a, self.b


@dataclass(frozen=True)
class StrandedGraph:
    vertex_count: int
    edges: Tuple[StrandEdge, ...] = ()
    flags: Tuple[Leg, ...] = ()
    passive: FrozenSet[Hashable] = frozenset()
    template: VertexTemplate = DEFAULT_TEMPLATE

    def __post_init__(self):
        edges = tuple(e if isinstance(e, StrandEdge) else StrandEdge(e[0], tuple(e[1]), tuple(e[2]))
                      for e in self.edges)
        edges = tuple(StrandEdge(e.id, (int(e.a[0]), int(e.a[1])), (int(e.b[0]), int(e.b[1]))) for e in edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "flags", tuple(sorted((int(v), int(l)) for v, l in self.flags)))
        object.__setattr__(self, "passive", frozenset(self.passive))
        self.validate()

    # -- structure ---------------------------------------------------------
    def validate(self) -> bool:
        if self.vertex_count < 0:
            raise StructureError("negative vertex count")
        self.template.validate()
        used: Dict[Leg, str] = {}
        ids = set()

        def claim(leg: Leg, who: str):
            v, l = leg
            if not 0 <= v < self.vertex_count or l not in LEGS:
                raise StructureError(f"{who} uses nonexistent leg {leg}")
            if leg in used:
                raise StructureError(f"leg {leg} used by both {used[leg]} and {who}")
            used[leg] = who

        for e in self.edges:
            if e.id in ids:
                raise StructureError(f"duplicate edge id {e.id!r}")
            ids.add(e.id)
            if e.a == e.b:
                raise StructureError(f"edge {e.id!r} glues leg {e.a} to itself")
            claim(e.a, f"edge {e.id!r}")
            claim(e.b, f"edge {e.id!r}")
        for leg in self.flags:
            claim(leg, "a flag")
        for v in range(self.vertex_count):
            for l in LEGS:
                if (v, l) not in used:
                    raise StructureError(f"vertex {v} leg {l} is dangling (valence must be four)")
        stray = self.passive - ids
        if stray:
            raise StructureError(f"passive edge ids {sorted(map(str, stray))} are not edges")
        self._check_strands()
        return True

    def _check_strands(self):
        visited = set()
        for s in self.strands():
            for p in s.positions:
                if p in visited:
                    raise StructureError(f"strand position {p} traversed twice")
                visited.add(p)
        if len(visited) != 12 * self.vertex_count:
            raise StructureError("strand tracing does not cover every slot")

    @property
    def edge_ids(self) -> Tuple[Hashable, ...]:
        return tuple(e.id for e in self.edges)

    @property
    def active(self) -> Tuple[Hashable, ...]:
        return tuple(e.id for e in self.edges if e.id not in self.passive)

    def edge(self, eid: Hashable) -> StrandEdge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise GraphInputError(f"unknown edge id {eid!r}")

    def slot_matching(self, eid: Hashable) -> Tuple[int, int, int]:
        e = self.edge(eid)
        return self.template.slot_matching(e.a[1], e.b[1])

    def _leg_partner(self) -> Dict[Leg, Tuple[Leg, StrandEdge]]:
        out = {}
        for e in self.edges:
            out[e.a] = (e.b, e)
            out[e.b] = (e.a, e)
        return out

    def strands(self) -> List["Strand"]:
        """Trace every strand; open strands start and end at flags."""
        t = self.template
        partner = self._leg_partner()

        def across(v, l, s):
            if (v, l) not in partner:
                return None
            (w, m), _ = partner[(v, l)]
            return w, m, t.slot_matching(l, m)[s]

        def inside(v, l, s):
            l2, s2 = t.segment(l, s)
            return v, l2, s2

        seen = set()
        out = []
        # open strands first, starting from flag slots
        starts = [(v, l, s) for v, l in self.flags for s in range(3)]
        starts += [(v, l, s) for v in range(self.vertex_count) for l in LEGS for s in range(3)]
        for start in starts:
            if start in seen:
                continue
            is_open = (start[0], start[1]) not in partner
            path = []
            p = start
            while True:
                if p in seen:
                    break
                q = inside(*p)
                seen.add(p)
                seen.add(q)
                path.extend((p, q))
                nxt = across(*q)
                if nxt is None:
                    break
                p = nxt
            out.append(Strand(tuple(path), closed=not is_open and across(*path[-1]) == start))
        return out

    # -- derived graphs ----------------------------------------------------
    def underlying_multigraph(self) -> Multigraph:
        return Multigraph(self.vertex_count,
                          tuple((e.id, e.a[0], e.b[0]) for e in self.edges),
                          tuple(((v, l), v) for v, l in self.flags),
                          self.passive)

    def classify_edge(self, eid: Hashable) -> str:
        return self.underlying_multigraph().classify_edge(eid)

    def active_regular_edges(self) -> List[Hashable]:
        M = self.underlying_multigraph()
        return [e for e in self.active if M.classify_edge(e) == REGULAR]

    def _subset(self, A: Optional[Iterable[Hashable]]) -> List[StrandEdge]:
        if A is None:
            return list(self.edges)
        A = set(A)
        unknown = A - set(self.edge_ids)
        if unknown:
            raise GraphInputError(f"unknown edge ids {sorted(map(str, unknown))}")
        return [e for e in self.edges if e.id in A]

    def jacket(self, A: Optional[Iterable[Hashable]] = None) -> RibbonGraph:
        """Ribbon graph of the subgraph ``A``; half-edge ids are ``(vertex, leg)``."""
        sub = self._subset(A)
        present = {leg for e in sub for leg in e.ends} | set(self.flags)
        rot = [tuple((v, l) for l in self.template.leg_order if (v, l) in present)
               for v in range(self.vertex_count)]
        return RibbonGraph(rot, [(e.id, e.a, e.b) for e in sub], self.flags)

    def corner_ribbon(self, A: Optional[Iterable[Hashable]] = None) -> RibbonGraph:
        """Corner construction: one 3-valent ribbon vertex per (vertex, corner)."""
        t = self.template
        sub = self._subset(A)
        rot = [tuple((v, c, f) for f in t.corner_order[c]) for v in range(self.vertex_count) for c in LEGS]
        glued = []
        used = set()
        for e in sub:
            (v, l), (w, m) = e.a, e.b
            cm = t.gluing[(l, m)]
            for c in sorted(_complement(l)):
                ha, hb = (v, c, l), (w, cm[c], m)
                glued.append(((e.id, c), ha, hb))
                used.update((ha, hb))
        flags = {h for r in rot for h in r} - used
        return RibbonGraph(rot, glued, flags)

    def open_vertices(self, A: Optional[Iterable[Hashable]] = None) -> FrozenSet[int]:
        """Vertices with at least one leg not glued by an edge of ``A``."""
        glued = {leg for e in self._subset(A) for leg in e.ends}
        return frozenset(v for v in range(self.vertex_count) if any((v, l) not in glued for l in LEGS))

    def bubbles(self, A: Optional[Iterable[Hashable]] = None) -> "BubbleSet":
        return _split_bubbles(self.corner_ribbon(A), self.open_vertices(A))

    def bubble_genus_sum(self, A: Optional[Iterable[Hashable]] = None) -> int:
        """Total genus of the closed bubbles of ``A``."""
        return self.bubbles(A).genus_sum()

    def is_manifold_dual(self) -> str:
        return "manifold" if self.bubble_genus_sum() == 0 else "pseudo_manifold"

    # -- operations ----------------------------------------------------------
    def delete(self, eid: Hashable) -> "StrandedGraph":
        e = self.edge(eid)
        if eid in self.passive:
            raise OperationError(f"cannot delete passive edge {eid!r}")
        return StrandedGraph(self.vertex_count, tuple(x for x in self.edges if x.id != eid),
                             self.flags + (e.a, e.b), self.passive, self.template)

    def contract(self, eid: Hashable) -> "StrandedGraph":
        self.edge(eid)
        if eid in self.passive:
            raise OperationError(f"edge {eid!r} is already passive")
        return StrandedGraph(self.vertex_count, self.edges, self.flags, self.passive | {eid}, self.template)

    def relabel_vertices(self, perm: Sequence[int]) -> "StrandedGraph":
        edges = tuple(StrandEdge(e.id, (perm[e.a[0]], e.a[1]), (perm[e.b[0]], e.b[1])) for e in self.edges)
        flags = tuple((perm[v], l) for v, l in self.flags)
        return StrandedGraph(self.vertex_count, edges, flags, self.passive, self.template)


@dataclass(frozen=True)
class Strand:
    positions: Tuple[Tuple[int, int, int], ...]
    closed: bool


# ---------------------------------------------------------------------------
# bubbles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bubble:
    id: int
    corners: Tuple[Tuple[int, int], ...]
    ribbon: RibbonGraph
    genus: int
    closed: bool = True

    @property
    def counted_genus(self) -> int:
        return self.genus if self.closed else 0

    @property
    def signature(self) -> Tuple[int, int, int, int]:
        return (self.ribbon.vertex_count, len(self.ribbon.edges), self.ribbon.face_count(), self.genus)


def bubble_order_key(corners: Sequence[Tuple[int, int]]):
    """Canonical bubble order: fewer corners first, then the sorted corner list."""
    return len(corners), tuple(sorted(corners))


class BubbleSet(tuple):
    """Bubbles in canonical order (see :func:`bubble_order_key`)."""

    def signatures(self) -> List[Tuple[int, int, int, int]]:
        return sorted(b.signature for b in self)

    def genus_sum(self) -> int:
        return sum(b.counted_genus for b in self)

    def closed(self) -> "BubbleSet":
        return BubbleSet(b for b in self if b.closed)


def _split_bubbles(R: RibbonGraph, open_vertices: Iterable[int] = ()) -> BubbleSet:
    open_vertices = set(open_vertices)
    labels = R.component_labels()
    groups: Dict[int, List[int]] = {}
    for v, root in enumerate(labels):
        groups.setdefault(root, []).append(v)
    comps = sorted(groups.values(), key=lambda vs: bubble_order_key([R.rotations[v][0][:2] for v in vs]))
    out = []
    for i, vs in enumerate(comps):
        vset = set(vs)
        rot = [R.rotations[v] for v in vs]
        hs = {h for r in rot for h in r}
        edges = [t for t in R.edges if t[1] in hs]
        flags = R.flags & hs
        ribbon = RibbonGraph(rot, edges, flags)
        (comp,) = ribbon.euler_genus()
        corners = tuple(sorted(R.rotations[v][0][:2] for v in vset))
        closed = not any(v in open_vertices for v, _ in corners)
        out.append(Bubble(i, corners, ribbon, comp.genus, closed))
    return BubbleSet(out)


# ---------------------------------------------------------------------------
# colorability
# ---------------------------------------------------------------------------

WHITE, BLACK = "white", "black"


@dataclass(frozen=True)
class Coloring:
    edge_colors: Mapping[Hashable, int]
    vertex_signs: Mapping[int, str]
    offsets: Mapping[int, int]

    def leg_color(self, template: VertexTemplate, v: int, leg: int) -> int:
        pos = template.leg_position(leg)
        s = self.offsets[v]
        return (pos + s) % 4 if self.vertex_signs[v] == WHITE else (s - pos) % 4


def _color_ok(G: StrandedGraph, col: Coloring) -> bool:
    t = G.template
    for e in G.edges:
        (v, l), (w, m) = e.a, e.b
        if col.vertex_signs[v] == col.vertex_signs[w]:
            return False
        c = col.leg_color(t, v, l)
        if c != col.leg_color(t, w, m) or col.edge_colors.get(e.id) != c:
            return False
        cm = t.gluing[(l, m)]
        for x in _complement(l):
            if col.leg_color(t, v, x) != col.leg_color(t, w, cm[x]):
                return False
    return True


def find_coloring(G: StrandedGraph) -> Optional[Coloring]:
    """Search for a coloring; ``None`` when the graph is not colorable.

    A vertex state is a sign plus a rotation offset of the colors along the
    leg order (read forwards at white vertices, backwards at black ones).
    The state of one vertex per component fixes all others, so each
    component needs at most eight trials.  Corners carry the color of the
    opposite leg, and every gluing must match corner colors.
    """
    t = G.template
    adj: Dict[int, List[Tuple[int, int, int]]] = {v: [] for v in range(G.vertex_count)}
    for e in G.edges:
        (v, l), (w, m) = e.a, e.b
        adj[v].append((l, w, m))
        adj[w].append((m, v, l))
    signs: Dict[int, str] = {}
    offsets: Dict[int, int] = {}

    def color_at(sign, s, leg):
        pos = t.leg_position(leg)
        return (pos + s) % 4 if sign == WHITE else (s - pos) % 4

    def offset_for(sign, leg, color):
        pos = t.leg_position(leg)
        return (color - pos) % 4 if sign == WHITE else (color + pos) % 4

    for root in range(G.vertex_count):
        if root in signs:
            continue
        for sign, s in itertools.product((WHITE, BLACK), range(4)):
            trial_s, trial_o = {root: sign}, {root: s}
            stack = [root]
            ok = True
            while stack and ok:
                v = stack.pop()
                for l, w, m in adj[v]:
                    c = color_at(trial_s[v], trial_o[v], l)
                    ws = BLACK if trial_s[v] == WHITE else WHITE
                    wo = offset_for(ws, m, c)
                    if w in trial_s:
                        if trial_s[w] != ws or trial_o[w] != wo:
                            ok = False
                            break
                    else:
                        trial_s[w], trial_o[w] = ws, wo
                        stack.append(w)
            if ok:
                signs.update(trial_s)
                offsets.update(trial_o)
                break
        else:
            return None
    colors = {}
    for e in G.edges:
        v, l = e.a
        colors[e.id] = color_at(signs[v], offsets[v], l)
    col = Coloring(colors, signs, offsets)
    return col if _color_ok(G, col) else None


def bubbles_by_color(G: StrandedGraph, coloring: Coloring) -> BubbleSet:
    """Bubbles as components of the subgraphs on three of the four colors.

    Works from the coloring alone: the corner of color ``c`` at each vertex
    is joined across every edge whose color differs from ``c``.
    """
    if not _color_ok(G, coloring):
        raise StructureError("invalid coloring for this graph")
    t = G.template
    corner_of = {}
    for v in range(G.vertex_count):
        for x in LEGS:
            corner_of[(v, coloring.leg_color(t, v, x))] = x
    rot = []
    glued = []
    used = set()
    for c in range(4):
        for v in range(G.vertex_count):
            x = corner_of[(v, c)]
            rot.append(tuple((v, x, f) for f in t.corner_order[x]))
        for e in G.edges:
            if coloring.edge_colors[e.id] == c:
                continue
            (v, l), (w, m) = e.a, e.b
            ha, hb = (v, corner_of[(v, c)], l), (w, corner_of[(w, c)], m)
            glued.append(((e.id, c), ha, hb))
            used.update((ha, hb))
    flags = {h for r in rot for h in r} - used
    return _split_bubbles(RibbonGraph(rot, glued, flags), G.open_vertices())


# ---------------------------------------------------------------------------
# module-level API and helpers
# ---------------------------------------------------------------------------

def validate(G: StrandedGraph) -> bool:
    return G.validate()


def underlying_multigraph(G: StrandedGraph) -> Multigraph:
    return G.underlying_multigraph()


def jacket(G: StrandedGraph, A=None) -> RibbonGraph:
    return G.jacket(A)


def bubbles(G: StrandedGraph, A=None) -> BubbleSet:
    return G.bubbles(A)


def bubble_genus_sum(G: StrandedGraph, A=None) -> int:
    return G.bubble_genus_sum(A)


def is_manifold_dual(G: StrandedGraph) -> str:
    return G.is_manifold_dual()


def delete(G: StrandedGraph, e) -> StrandedGraph:
    return G.delete(e)


def contract(G: StrandedGraph, e) -> StrandedGraph:
    return G.contract(e)


def disjoint_union(G1: StrandedGraph, G2: StrandedGraph) -> StrandedGraph:
    off = G1.vertex_count
    edges = tuple(StrandEdge((0, e.id), e.a, e.b) for e in G1.edges)
    edges += tuple(StrandEdge((1, e.id), (e.a[0] + off, e.a[1]), (e.b[0] + off, e.b[1])) for e in G2.edges)
    flags = G1.flags + tuple((v + off, l) for v, l in G2.flags)
    passive = {(0, e) for e in G1.passive} | {(1, e) for e in G2.passive}
    return StrandedGraph(off + G2.vertex_count, edges, flags, frozenset(passive), G1.template)


def random_stranded_graph(n_vertices: int, rng: random.Random, n_flags: int = 0,
                          passive_fraction: float = 0.0, template: VertexTemplate = DEFAULT_TEMPLATE,
                          max_edges: Optional[int] = None) -> StrandedGraph:
    """Random leg pairing on ``n_vertices`` vertices.

    ``n_flags`` legs (adjusted to keep the leg count even) become flags and
    the rest are paired uniformly at random.  ``max_edges`` converts surplus
    pairs into flag pairs.
    """
    legs = [(v, l) for v in range(n_vertices) for l in LEGS]
    rng.shuffle(legs)
    n_flags = min(n_flags + (n_flags % 2), len(legs))
    flags = legs[:n_flags]
    rest = legs[n_flags:]
    pairs = [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
    if max_edges is not None and len(pairs) > max_edges:
        for a, b in pairs[max_edges:]:
            flags.extend((a, b))
        pairs = pairs[:max_edges]
    edges = tuple(StrandEdge(f"e{i}", a, b) for i, (a, b) in enumerate(pairs))
    passive = frozenset(e.id for e in edges if rng.random() < passive_fraction)
    return StrandedGraph(n_vertices, edges, tuple(flags), passive, template)


def edge_kind(G: StrandedGraph, eid) -> str:
    kind = G.classify_edge(eid)
    assert kind in (BRIDGE, SELF_LOOP, REGULAR)
    return kind


def random_colored_graph(n_white: int, rng: random.Random, template: VertexTemplate = DEFAULT_TEMPLATE) -> StrandedGraph:
    """Random colorable graph on ``n_white`` white and as many black vertices.

    Each color class is a random perfect matching between white and black
    vertices.  Colors advance along the leg order at white vertices and
    retreat at black ones; offsets share one parity so that every gluing
    carries corner colors onto equal corner colors.
    """
    V = 2 * n_white
    parity = rng.randrange(2)
    offsets = [2 * rng.randrange(2) + parity for _ in range(V)]
    order = template.leg_order
    edges = []
    for c in range(4):
        blacks = list(range(n_white, V))
        rng.shuffle(blacks)
        for w, b in zip(range(n_white), blacks):
            lw = order[(c - offsets[w]) % 4]
            lb = order[(offsets[b] - c) % 4]
            edges.append(StrandEdge(f"e{len(edges)}", (w, lw), (b, lb)))
    return StrandedGraph(V, tuple(edges), (), frozenset(), template)
