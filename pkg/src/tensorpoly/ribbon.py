"""Ribbon graphs given by rotation systems.

Each vertex carries a cyclic sequence of half-edge ids.  Edges pair
half-edges; any half-edge left unpaired must be declared a flag.  All ribbon
graphs here are orientable (no twisted edges).

Boundary walks follow the usual rule: from half-edge ``h`` cross the edge to
its partner, then move to the successor of the partner in its vertex's
cyclic order.  Flags are stepped over, so a flag never splits a boundary
component.  Walks that step over at least one flag are reported as open.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import ContractError, GraphInputError, OrientabilityError, StructureError
from .graph import DisjointSet, Multigraph, beta
from .polynomial import MultiPoly, X, Y, Z, poly_sum

HalfEdge = Hashable


@dataclass(frozen=True)
class BoundaryReport:
    F: int
    walks: Tuple[Tuple[HalfEdge, ...], ...]
    walk_vertex: Tuple[int, ...]
    open_walks: int = 0


@dataclass(frozen=True)
class ComponentGenus:
    vertices: int
    edges: int
    faces: int
    chi: int
    genus: int


class RibbonGraph:
    """Orientable ribbon graph: rotations, edge pairing and flags."""

    __slots__ = ("rotations", "edges", "flags", "_vertex_of", "_partner", "_succ")

    def __init__(self, rotations: Sequence[Sequence[HalfEdge]],
                 edges: Iterable[Tuple[Hashable, HalfEdge, HalfEdge]] = (),
                 flags: Iterable[HalfEdge] = ()):
        self.rotations = tuple(tuple(r) for r in rotations)
        self.edges = tuple((e, a, b) for e, a, b in edges)
        self.flags = frozenset(flags)
        vertex_of: Dict[HalfEdge, int] = {}
        for v, rot in enumerate(self.rotations):
            for h in rot:
                if h in vertex_of:
                    raise StructureError(f"half-edge {h!r} appears twice in the rotations")
                vertex_of[h] = v
        partner: Dict[HalfEdge, HalfEdge] = {}
        ids = set()
        for e, a, b in self.edges:
            if e in ids:
                raise StructureError(f"duplicate edge id {e!r}")
            ids.add(e)
            for h in (a, b):
                if h not in vertex_of:
                    raise StructureError(f"edge {e!r} uses half-edge {h!r} absent from every rotation")
                if h in partner or h in self.flags:
                    raise StructureError(f"half-edge {h!r} matched more than once")
            if a == b:
                raise StructureError(f"edge {e!r} pairs half-edge {a!r} with itself")
            partner[a] = b
            partner[b] = a
        for h in self.flags:
            if h not in vertex_of:
                raise StructureError(f"flag {h!r} absent from every rotation")
        unmatched = set(vertex_of) - set(partner) - self.flags
        if unmatched:
            raise StructureError(f"half-edges {sorted(map(repr, unmatched))} are neither paired nor flags")
        succ: Dict[HalfEdge, HalfEdge] = {}
        for rot in self.rotations:
            for i, h in enumerate(rot):
                succ[h] = rot[(i + 1) % len(rot)]
        self._vertex_of = vertex_of
        self._partner = partner
        self._succ = succ

    def __repr__(self):
        return f"RibbonGraph(V={self.vertex_count}, E={len(self.edges)}, flags={len(self.flags)})"

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return (self.rotations, self.edges, self.flags) == (other.rotations, other.edges, other.flags)

    def __hash__(self):
        return hash((self.rotations, self.edges, self.flags))

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_ids(self) -> Tuple[Hashable, ...]:
        return tuple(e for e, _, _ in self.edges)

    def vertex_of(self, h: HalfEdge) -> int:
        return self._vertex_of[h]

    def partner(self, h: HalfEdge) -> Optional[HalfEdge]:
        return self._partner.get(h)

    def edge(self, e: Hashable) -> Tuple[HalfEdge, HalfEdge]:
        for eid, a, b in self.edges:
            if eid == e:
                return a, b
        raise GraphInputError(f"unknown edge id {e!r}")

    def underlying_multigraph(self) -> Multigraph:
        flags = tuple((h, self._vertex_of[h]) for h in sorted(self.flags, key=repr))
        return Multigraph(self.vertex_count,
                          tuple((e, self._vertex_of[a], self._vertex_of[b]) for e, a, b in self.edges),
                          flags)

    def spanning_subgraph(self, A: Iterable[Hashable]) -> "RibbonGraph":
        """Keep the edges in ``A``; other edges disappear with their half-edges."""
        A = set(A)
        unknown = A - set(self.edge_ids)
        if unknown:
            raise GraphInputError(f"unknown edge ids {sorted(map(str, unknown))}")
        dropped = {h for e, a, b in self.edges if e not in A for h in (a, b)}
        rot = [tuple(h for h in r if h not in dropped) for r in self.rotations]
        return RibbonGraph(rot, [t for t in self.edges if t[0] in A], self.flags)

    # ------------------------------------------------------------------
    def _next(self, h: HalfEdge) -> Tuple[HalfEdge, bool]:
        """Successor of ``h`` skipping flags; also report whether a flag was skipped."""
        nxt = self._succ[h]
        skipped = False
        while nxt in self.flags:
            skipped = True
            nxt = self._succ[nxt]
        return nxt, skipped

    def trace_boundaries(self) -> BoundaryReport:
        walks: List[Tuple[HalfEdge, ...]] = []
        where: List[int] = []
        opened = 0
        seen = set()
        for v, rot in enumerate(self.rotations):
            real = [h for h in rot if h in self._partner]
            if not real:
                walks.append(())
                where.append(v)
                if rot:
                    opened += 1
                continue
            for h in real:
                if h in seen:
                    continue
                walk = []
                is_open = False
                x = h
                while x not in seen:
                    seen.add(x)
                    walk.append(x)
                    x, skipped = self._next(self._partner[x])
                    is_open |= skipped
                if x != h:
                    raise StructureError("boundary walk did not close; rotation system is corrupted")
                walks.append(tuple(walk))
                where.append(v)
                opened += is_open
        return BoundaryReport(len(walks), tuple(walks), tuple(where), opened)

    def face_count(self) -> int:
        return self.trace_boundaries().F

    def component_labels(self) -> List[int]:
        ds = DisjointSet(self.vertex_count)
        for _, a, b in self.edges:
            ds.union(self._vertex_of[a], self._vertex_of[b])
        return [ds.find(v) for v in range(self.vertex_count)]

    def euler_genus(self) -> List[ComponentGenus]:
        """Per connected component ``chi = V - E + F`` and ``g = (2 - chi) / 2``."""
        labels = self.component_labels()
        report = self.trace_boundaries()
        stats: Dict[int, List[int]] = {}
        for v in range(self.vertex_count):
            stats.setdefault(labels[v], [0, 0, 0])[0] += 1
        for _, a, _ in self.edges:
            stats[labels[self._vertex_of[a]]][1] += 1
        for v in report.walk_vertex:
            stats[labels[v]][2] += 1
        out = []
        for root in sorted(stats):
            V, E, F = stats[root]
            chi = V - E + F
            if chi % 2:
                raise OrientabilityError(f"component with V={V}, E={E}, F={F} has odd Euler characteristic {chi}")
            g = (2 - chi) // 2
            if g < 0:
                raise StructureError(f"component with V={V}, E={E}, F={F} has negative genus")
            out.append(ComponentGenus(V, E, F, chi, g))
        return out

    def genus(self) -> int:
        return sum(c.genus for c in self.euler_genus())


def trace_boundaries(R: RibbonGraph) -> BoundaryReport:
    return R.trace_boundaries()


def euler_genus(R: RibbonGraph) -> List[ComponentGenus]:
    return R.euler_genus()


def _subsets(R: RibbonGraph, required: Iterable[Hashable] = ()):
    required = set(required)
    unknown = required - set(R.edge_ids)
    if unknown:
        raise GraphInputError(f"unknown edge ids {sorted(map(str, unknown))}")
    free = [e for e in R.edge_ids if e not in required]
    for r in range(len(free) + 1):
        for chosen in itertools.combinations(free, r):
            H = list(required) + list(chosen)
            yield H, R.spanning_subgraph(H)


def br_polynomial(R: RibbonGraph, required: Iterable[Hashable] = ()) -> MultiPoly:
    """Bollobas-Riordan polynomial in ``x, y, z``.

    With ``required`` the sum runs only over subsets containing those edges.
    """
    G = R.underlying_multigraph()
    V = R.vertex_count
    kG = G.components()
    counts: Dict[Tuple[int, int, int], int] = {}
    for H, sub in _subsets(R, required):
        k = G.components(H)
        n = len(H) - V + k
        zexp = k - sub.face_count() + n
        key = (k - kG, n, zexp)
        counts[key] = counts.get(key, 0) + 1
    xm1 = X - 1
    return poly_sum(c * xm1 ** a * Y ** n * Z ** ze for (a, n, ze), c in counts.items())


def multivariate_br(R: RibbonGraph) -> MultiPoly:
    """``sum_H x^k(H) prod_{e in H} beta_e z^F(H)``."""
    G = R.underlying_multigraph()
    terms = {}
    for H, sub in _subsets(R):
        mono = [("x", G.components(H)), ("z", sub.face_count())] + [(beta(e), 1) for e in H]
        key = tuple(sorted(mono))
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(terms)


def ribbon_delete(R: RibbonGraph, e: Hashable) -> RibbonGraph:
    R.edge(e)
    return R.spanning_subgraph([x for x in R.edge_ids if x != e])


def ribbon_contract(R: RibbonGraph, e: Hashable) -> RibbonGraph:
    """Merge the endpoints of a non-loop edge by splicing their cyclic orders."""
    a, b = R.edge(e)
    u, w = R.vertex_of(a), R.vertex_of(b)
    if u == w:
        raise ContractError(f"contracting self-loop {e!r} is not supported")
    ru, rw = R.rotations[u], R.rotations[w]
    i, j = ru.index(a), rw.index(b)
    merged = ru[i + 1:] + ru[:i] + rw[j + 1:] + rw[:j]
    keep, gone = min(u, w), max(u, w)
    rot = []
    for v, r in enumerate(R.rotations):
        if v == keep:
            rot.append(merged)
        elif v != gone:
            rot.append(r)
    return RibbonGraph(rot, [t for t in R.edges if t[0] != e], R.flags)


def is_regular(R: RibbonGraph, e: Hashable) -> bool:
    return R.underlying_multigraph().classify_edge(e) == "regular"


def _first_regular(R: RibbonGraph) -> Optional[Hashable]:
    G = R.underlying_multigraph()
    for e in R.edge_ids:
        if G.classify_edge(e) == "regular":
            return e
    return None


def br_delcontr(R: RibbonGraph) -> MultiPoly:
    """``R_G = R_{G-e} + R_{G/e}`` on regular edges, subset sum once none is left."""
    e = _first_regular(R)
    if e is None:
        return br_polynomial(R)
    return br_delcontr(ribbon_delete(R, e)) + br_delcontr(ribbon_contract(R, e))


def multivariate_br_delcontr(R: RibbonGraph) -> MultiPoly:
    """``Z_G = Z_{G-e} + beta_e Z_{G/e}`` on non-loop edges, subset sum on loops only."""
    for e, a, b in R.edges:
        if R.vertex_of(a) != R.vertex_of(b):
            be = MultiPoly.var(beta(e))
            return multivariate_br_delcontr(ribbon_delete(R, e)) + be * multivariate_br_delcontr(ribbon_contract(R, e))
    return multivariate_br(R)
