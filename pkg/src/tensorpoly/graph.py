"""Ordinary multigraphs, rank/nullity, and the Tutte polynomials.

Subgraphs are always spanning: an edge subset ``A`` keeps every vertex, so
``k(A)`` counts isolated vertices as components.  Flags ride along on the
graph but never enter any edge-derived quantity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterable, Optional, Sequence, Tuple

from .errors import ContractError, GraphInputError
from .polynomial import MultiPoly, X, Y, poly_sum

EdgeId = Hashable

BRIDGE = "bridge"
SELF_LOOP = "self_loop"
REGULAR = "regular"

#: subset sums are used up to this many edges, deletion/contraction above
DEFAULT_SUBSET_CAP = 20


class DisjointSet:
    """Union-find over ``range(n)`` with path halving."""

    __slots__ = ("parent", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.count -= 1
        return True


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: Tuple[Tuple[EdgeId, int, int], ...] = ()
    flags: Tuple[Tuple[Hashable, int], ...] = ()
    passive: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((e, int(u), int(v)) for e, u, v in self.edges))
        object.__setattr__(self, "flags", tuple(self.flags))
        object.__setattr__(self, "passive", frozenset(self.passive))
        if self.vertex_count < 0:
            raise GraphInputError("negative vertex count")
        seen = set()
        for e, u, v in self.edges:
            if e in seen:
                raise GraphInputError(f"duplicate edge id {e!r}")
            seen.add(e)
            for x in (u, v):
                if not 0 <= x < self.vertex_count:
                    raise GraphInputError(f"edge {e!r} references missing vertex {x}")
        for fid, v in self.flags:
            if not 0 <= v < self.vertex_count:
                raise GraphInputError(f"flag {fid!r} references missing vertex {v}")

    @property
    def edge_ids(self) -> Tuple[EdgeId, ...]:
        return tuple(e for e, _, _ in self.edges)

    def endpoints(self, e: EdgeId) -> Tuple[int, int]:
        for eid, u, v in self.edges:
            if eid == e:
                return u, v
        raise GraphInputError(f"unknown edge id {e!r}")

    def _subset(self, A: Optional[Iterable[EdgeId]]):
        if A is None:
            return self.edges
        A = set(A)
        unknown = A - set(self.edge_ids)
        if unknown:
            raise GraphInputError(f"unknown edge ids {sorted(map(str, unknown))}")
        return [t for t in self.edges if t[0] in A]

    def components(self, A: Optional[Iterable[EdgeId]] = None) -> int:
        ds = DisjointSet(self.vertex_count)
        for _, u, v in self._subset(A):
            ds.union(u, v)
        return ds.count

    def rank(self, A: Optional[Iterable[EdgeId]] = None) -> int:
        return self.vertex_count - self.components(A)

    def nullity(self, A: Optional[Iterable[EdgeId]] = None) -> int:
        sub = self._subset(A)
        return len(sub) - self.rank([e for e, _, _ in sub])

    def classify_edge(self, e: EdgeId) -> str:
        u, v = self.endpoints(e)
        if u == v:
            return SELF_LOOP
        rest = [eid for eid in self.edge_ids if eid != e]
        if self.components(rest) > self.components():
            return BRIDGE
        return REGULAR

    def delete_edge(self, e: EdgeId) -> "Multigraph":
        self.endpoints(e)
        return Multigraph(self.vertex_count, tuple(t for t in self.edges if t[0] != e),
                          self.flags, self.passive - {e})

    def contract_edge_classical(self, e: EdgeId) -> "Multigraph":
        """Identify the endpoints of ``e`` and drop it; the higher vertex is removed."""
        u, v = self.endpoints(e)
        if u == v:
            raise ContractError(f"cannot contract self-loop {e!r}")
        keep, gone = min(u, v), max(u, v)

        def relabel(x):
            x = keep if x == gone else x
            return x - 1 if x > gone else x

        edges = tuple((eid, relabel(a), relabel(b)) for eid, a, b in self.edges if eid != e)
        flags = tuple((fid, relabel(x)) for fid, x in self.flags)
        return Multigraph(self.vertex_count - 1, edges, flags, self.passive - {e})


def _subset_terms(G: Multigraph, required: Iterable[EdgeId] = ()):
    """Yield ``(A, k(A))`` for every spanning subset containing ``required``."""
    required = set(required)
    free = [t for t in G.edges if t[0] not in required]
    fixed = [t for t in G.edges if t[0] in required]
    for r in range(len(free) + 1):
        for chosen in itertools.combinations(free, r):
            ds = DisjointSet(G.vertex_count)
            for _, u, v in fixed:
                ds.union(u, v)
            for _, u, v in chosen:
                ds.union(u, v)
            yield [t[0] for t in fixed] + [t[0] for t in chosen], ds.count


def tutte_subset_sum(G: Multigraph, required: Iterable[EdgeId] = ()) -> MultiPoly:
    """Definitional sum over spanning subsets (optionally pinned to contain ``required``)."""
    kG = G.components()
    counts = {}
    for A, k in _subset_terms(G, required):
        # r(G) - r(A) = k(A) - k(G);  n(A) = |A| - V + k(A)
        key = (k - kG, len(A) - G.vertex_count + k)
        counts[key] = counts.get(key, 0) + 1
    xm1, ym1 = X - 1, Y - 1
    return poly_sum(c * xm1 ** a * ym1 ** b for (a, b), c in counts.items())


def _canonical_key(G: Multigraph):
    return G.vertex_count, tuple(sorted((min(u, v), max(u, v)) for _, u, v in G.edges))


@lru_cache(maxsize=65536)
def _tutte_rec(key) -> MultiPoly:
    n, edges = key
    if not edges:
        return MultiPoly.one()
    G = Multigraph(n, tuple((i, u, v) for i, (u, v) in enumerate(edges)))
    loops = sum(1 for u, v in edges if u == v)
    if loops:
        rest = Multigraph(n, tuple((i, u, v) for i, (u, v) in enumerate(edges) if u != v))
        return Y ** loops * _tutte_rec(_canonical_key(rest))
    # classical terminal forms: a bridge contributes x
    for i, _ in enumerate(edges):
        if G.classify_edge(i) == BRIDGE:
            return X * _tutte_rec(_canonical_key(G.contract_edge_classical(i)))
    return _tutte_rec(_canonical_key(G.delete_edge(0))) + _tutte_rec(_canonical_key(G.contract_edge_classical(0)))


def tutte(G: Multigraph, cap: int = DEFAULT_SUBSET_CAP) -> MultiPoly:
    """Tutte polynomial in ``x, y``.

    Uses the subset sum for up to ``cap`` edges and deletion/contraction
    beyond that.
    """
    if len(G.edges) <= cap:
        return tutte_subset_sum(G)
    return _tutte_rec(_canonical_key(G))


def tutte_delcontr(G: Multigraph) -> MultiPoly:
    return _tutte_rec(_canonical_key(G))


def beta(e: EdgeId) -> str:
    return f"beta:{e}"


def multivariate_tutte(G: Multigraph) -> MultiPoly:
    """``sum_A q^k(A) prod_{e in A} beta_e``."""
    terms = {}
    for A, k in _subset_terms(G):
        mono = tuple(sorted([("q", k)] + [(beta(e), 1) for e in A]))
        terms[mono] = terms.get(mono, 0) + 1
    return MultiPoly(terms)


def cycle_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((f"e{i}", i, (i + 1) % n) for i in range(n)))


def disjoint_union(G1: Multigraph, G2: Multigraph) -> Multigraph:
    off = G1.vertex_count
    edges = tuple(((0, e), u, v) for e, u, v in G1.edges) + tuple(((1, e), u + off, v + off) for e, u, v in G2.edges)
    return Multigraph(off + G2.vertex_count, edges)


def regular_edges(G: Multigraph) -> Sequence[EdgeId]:
    return [e for e in G.edge_ids if G.classify_edge(e) == REGULAR]


def multivariate_tutte_delcontr(G: Multigraph) -> MultiPoly:
    """``Z_G = Z_{G-e} + beta_e Z_{G/e}`` on non-loop edges; loops factor out as ``1 + beta_e``."""
    if not G.edges:
        return MultiPoly.var("q", G.vertex_count)
    e, u, v = G.edges[0]
    be = MultiPoly.var(beta(e))
    if u == v:
        return (1 + be) * multivariate_tutte_delcontr(G.delete_edge(e))
    return multivariate_tutte_delcontr(G.delete_edge(e)) + be * multivariate_tutte_delcontr(G.contract_edge_classical(e))
