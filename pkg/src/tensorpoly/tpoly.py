"""The T polynomial of stranded graphs and its multivariate/hypervariate forms.

Sums run over spanning subgraphs ``H = A + passive`` where ``A`` ranges over
subsets of the active edges.  A subset ``H`` contributes

    (x-1)^(r(G)-r(H)) y^n(H) z^(k(H)-F(H)+n(H)) t^(2 * bubble genus sum)

with ``k, r, n`` from the underlying multigraph and ``F`` from the jacket.

The subset sum is evaluated by a compiled evaluator that turns the graph
into flat integer tables once, then walks jacket and corner boundaries for
each subset mask.  Mask ranges can be spread over worker processes; the
worker count defaults to ``TENSORPOLY_THREADS`` (or 1).
"""
from __future__ import annotations

import itertools
import multiprocessing as mp
import os
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import OrientabilityError, StrategyMismatchError, StructureError
from .graph import REGULAR, beta
from .polynomial import MultiPoly, X, Y, Z, T, poly_sum
from .stranded import LEGS, StrandedGraph

PLAIN, MULTIVARIATE, HYPERVARIATE = "plain", "multivariate", "hypervariate"
SUBSET, DELCONTR, BOTH = "subset_sum", "del_contr", "both"

#: canonical-relabeling memoization is used up to this many vertices
MEMO_VERTEX_LIMIT = 6


def gamma(i: int) -> str:
    return f"gamma:b{i}"


def default_workers() -> int:
    raw = os.environ.get("TENSORPOLY_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# compiled evaluator
# ---------------------------------------------------------------------------

class _Compiled:
    """Flat integer encoding of a stranded graph for fast subset evaluation.

    Jacket half-edge ``4*v + p`` is leg ``leg_order[p]`` of vertex ``v``;
    corner half-edge ``12*v + 3*c + j`` is the ``j``-th leg around corner
    ``c`` of vertex ``v``.
    """

    def __init__(self, G: StrandedGraph):
        t = G.template
        self.V = G.vertex_count
        self.active = list(G.active)
        self.passive = [e.id for e in G.edges if e.id in G.passive]
        order = {e: i for i, e in enumerate(self.active + self.passive)}
        edges = sorted(G.edges, key=lambda e: order[e.id])
        self.ends = [(e.a[0], e.b[0]) for e in edges]
        pos = {l: t.leg_position(l) for l in LEGS}
        self.jpair = [(4 * e.a[0] + pos[e.a[1]], 4 * e.b[0] + pos[e.b[1]]) for e in edges]
        cpos = {(c, f): j for c in LEGS for j, f in enumerate(t.corner_order[c])}
        self.cpair = []
        for e in edges:
            (v, l), (w, m) = e.a, e.b
            cm = t.gluing[(l, m)]
            self.cpair.append([(12 * v + 3 * c + cpos[(c, l)], 12 * w + 3 * cm[c] + cpos[(cm[c], m)])
                               for c in sorted(set(LEGS) - {l})])
        self.n_active = len(self.active)
        self.n_passive = len(self.passive)

    def evaluate(self, mask: int, detailed: bool = False):
        """Return ``(k, |H|, F, genus_sum)`` or, in detailed mode, per-bubble data."""
        V = self.V
        na = self.n_active
        chosen = [i for i in range(na) if mask >> i & 1] + list(range(na, na + self.n_passive))

        # components of the underlying graph
        parent = list(range(V))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        k = V
        for i in chosen:
            a, b = self.ends[i]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                k -= 1

        # jacket faces
        partner = {}
        for i in chosen:
            a, b = self.jpair[i]
            partner[a] = b
            partner[b] = a
        F = _count_faces(V, 4, partner)

        # vertices with every leg glued; bubbles touching any other vertex are open
        deg = [0] * V
        for i in chosen:
            a, b = self.ends[i]
            deg[a] += 1
            deg[b] += 1
        closed_v = [d == 4 for d in deg]
        if not detailed and not any(closed_v):
            return k, len(chosen), F, 0

        # corner construction
        cpartner = {}
        for i in chosen:
            for a, b in self.cpair[i]:
                cpartner[a] = b
                cpartner[b] = a
        nc = 4 * V
        if not detailed and all(closed_v):
            Fb = _count_faces(nc, 3, cpartner)
            comps = _corner_components(nc, cpartner)
            twice = 2 * comps - (nc - 3 * len(chosen) + Fb)
            if twice % 2 or twice < 0:
                raise OrientabilityError(f"corner construction has inconsistent Euler data (2g = {twice})")
            return k, len(chosen), F, twice // 2
        bubbles = _bubble_details(nc, cpartner, closed_v)
        if detailed:
            return k, len(chosen), F, bubbles
        return k, len(chosen), F, sum(g for _, g, closed in bubbles if closed)


def _corner_components(nc: int, partner: Dict[int, int]) -> int:
    parent = list(range(nc))
    comps = nc
    for a, b in partner.items():
        if a < b:
            ra, rb = a // 3, b // 3
            while parent[ra] != ra:
                parent[ra] = parent[parent[ra]]
                ra = parent[ra]
            while parent[rb] != rb:
                parent[rb] = parent[parent[rb]]
                rb = parent[rb]
            if ra != rb:
                parent[ra] = rb
                comps -= 1
    return comps


def _ring_successors(n_rings: int, size: int, partner: Dict[int, int]):
    succ = {}
    empty = 0
    for r in range(n_rings):
        base = r * size
        pres = [h for h in range(base, base + size) if h in partner]
        if not pres:
            empty += 1
            continue
        for i, h in enumerate(pres):
            succ[h] = pres[(i + 1) % len(pres)]
    return succ, empty


def _count_faces(n_rings: int, size: int, partner: Dict[int, int]) -> int:
    # absent half-edges (flags, edges outside H) are skipped by the walk;
    # a ring with nothing present is a single face of its own
    succ, faces = _ring_successors(n_rings, size, partner)
    seen = set()
    for h in succ:
        if h in seen:
            continue
        faces += 1
        x = h
        while x not in seen:
            seen.add(x)
            x = succ[partner[x]]
    return faces


def _bubble_details(nc: int, partner: Dict[int, int], closed_v: Sequence[bool]):
    """Per bubble ``(corners, genus, closed)`` in canonical bubble order.

    Corner ``c`` here is the flat index ``4 * vertex + corner``.
    """
    parent = list(range(nc))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in partner.items():
        if a < b:
            ra, rb = find(a // 3), find(b // 3)
            if ra != rb:
                parent[ra] = rb
    succ, _ = _ring_successors(nc, 3, partner)
    stats: Dict[int, List[int]] = {}
    for c in range(nc):
        stats.setdefault(find(c), [0, 0, 0, []])
        s = stats[find(c)]
        s[0] += 1
        s[3].append(c)
    for a in partner:
        stats[find(a // 3)][1] += 1  # each edge counted from both ends
    seen = set()
    for c in range(nc):
        if not any(h in partner for h in range(3 * c, 3 * c + 3)):
            stats[find(c)][2] += 1
    for h in succ:
        if h in seen:
            continue
        stats[find(h // 3)][2] += 1
        x = h
        while x not in seen:
            seen.add(x)
            x = succ[partner[x]]
    out = []
    for Vb, twoE, Fb, corners in stats.values():
        chi = Vb - twoE // 2 + Fb
        if chi % 2:
            raise OrientabilityError(f"bubble with V={Vb}, E={twoE // 2}, F={Fb} has odd Euler characteristic")
        closed = all(closed_v[c // 4] for c in corners)
        out.append((tuple(sorted(corners)), (2 - chi) // 2, closed))
    out.sort(key=lambda b: (len(b[0]), b[0]))
    return out


def _eval_chunk(args):
    comp, lo, hi, detailed = args
    return [(m, comp.evaluate(m, detailed)) for m in range(lo, hi)]


def _eval_chunk_counts(args):
    comp, lo, hi, kG = args
    counts = Counter()
    for m in range(lo, hi):
        k, size, F, g = comp.evaluate(m)
        n = size - comp.V + k
        counts[(k - kG, n, k - F + n, 2 * g)] += 1
    return counts


def _chunks(total: int, workers: int):
    parts = max(1, workers * 4)
    step = max(1, -(-total // parts))
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _run(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    with ctx.Pool(workers) as pool:
        return pool.map(fn, jobs)


def subset_terms(G: StrandedGraph, detailed: bool = False, workers: Optional[int] = None):
    """``[(A, (k, |H|, F, genus data))]`` for every active subset ``A``."""
    comp = _Compiled(G)
    workers = default_workers() if workers is None else workers
    total = 1 << comp.n_active
    results = _run(_eval_chunk, [(comp, lo, hi, detailed) for lo, hi in _chunks(total, workers)], workers)
    out = []
    for chunk in results:
        for mask, data in chunk:
            A = [comp.active[i] for i in range(comp.n_active) if mask >> i & 1]
            out.append((A, data))
    return out


# ---------------------------------------------------------------------------
# the polynomials
# ---------------------------------------------------------------------------

def _plain_from_counts(counts) -> MultiPoly:
    xm1 = X - 1
    return poly_sum(c * xm1 ** a * Y ** n * Z ** ze * T ** te for (a, n, ze, te), c in counts.items())


def t_polynomial(G: StrandedGraph, workers: Optional[int] = None) -> MultiPoly:
    """T polynomial by direct subset sum over the active edges."""
    comp = _Compiled(G)
    kG = G.underlying_multigraph().components()
    workers = default_workers() if workers is None else workers
    total = 1 << comp.n_active
    jobs = [(comp, lo, hi, kG) for lo, hi in _chunks(total, workers)]
    counts = Counter()
    for c in _run(_eval_chunk_counts, jobs, workers):
        counts.update(c)
    return _plain_from_counts(counts)


def _passive_betas(G: StrandedGraph):
    return [(beta(e), 1) for e in G.edge_ids if e in G.passive]


def multivariate_t(G: StrandedGraph, workers: Optional[int] = None) -> MultiPoly:
    """``sum_H x^k(H) prod_{e in H} beta_e z^F(H) t^(2 * genus sum)``."""
    fixed = _passive_betas(G)
    terms = {}
    for A, (k, _, F, g) in subset_terms(G, workers=workers):
        mono = tuple(sorted([("x", k), ("z", F), ("t", 2 * g)] + fixed + [(beta(e), 1) for e in A]))
        terms[mono] = terms.get(mono, 0) + 1
    return MultiPoly(terms)


def hypervariate_t(G: StrandedGraph, literal: bool = False, workers: Optional[int] = None) -> MultiPoly:
    """Multivariate form with one ``gamma`` per bubble in place of ``t``.

    Bubbles of each subgraph are indexed in canonical order (fewer corners
    first, then sorted corner sets).  By default bubble ``b`` carries
    ``gamma_b^(2 g_b)``, with open bubbles counting as planar;
    ``literal=True`` puts the total ``2 * genus sum`` on every bubble's
    variable instead.
    """
    fixed = _passive_betas(G)
    terms = {}
    for A, (k, _, F, bubbles) in subset_terms(G, detailed=True, workers=workers):
        counted = [g if closed else 0 for _, g, closed in bubbles]
        total = sum(counted)
        gam = [(gamma(i), 2 * (total if literal else g)) for i, g in enumerate(counted)]
        mono = tuple(sorted([("x", k), ("z", F)] + fixed + [(beta(e), 1) for e in A] + gam))
        terms[mono] = terms.get(mono, 0) + 1
    return MultiPoly(terms)


_VARIANTS: Dict[str, Callable[[StrandedGraph], MultiPoly]] = {
    PLAIN: t_polynomial,
    MULTIVARIATE: multivariate_t,
    HYPERVARIATE: hypervariate_t,
}


# ---------------------------------------------------------------------------
# deletion / contraction
# ---------------------------------------------------------------------------

def _edge_sort_key(e):
    s = str(e)
    digits = "".join(ch for ch in s if ch.isdigit())
    return (s.rstrip("0123456789"), int(digits) if digits and s.endswith(digits) else -1, s)


def canonical_key(G: StrandedGraph):
    """Relabeling-invariant key for memoizing the plain polynomial."""
    best = None
    for perm in itertools.permutations(range(G.vertex_count)):
        edges = []
        for e in G.edges:
            a = (perm[e.a[0]], e.a[1])
            b = (perm[e.b[0]], e.b[1])
            edges.append((min(a, b), max(a, b), e.id in G.passive))
        flags = tuple(sorted((perm[v], l) for v, l in G.flags))
        key = (tuple(sorted(edges)), flags)
        if best is None or key < best:
            best = key
    return G.vertex_count, G.template.name, best


def pivot_candidates(G: StrandedGraph) -> List[Hashable]:
    return sorted(G.active_regular_edges(), key=_edge_sort_key)


def t_polynomial_delcontr(G: StrandedGraph, pivot_order: Optional[Sequence[Hashable]] = None,
                          variant: str = PLAIN, memo: Optional[dict] = None) -> MultiPoly:
    """Evaluate by ``T_G = T_{G-e} + T_{G/e}`` on active regular edges.

    The pivot is the first active regular edge in ``pivot_order`` (lowest
    edge id by default).  When no active regular edge is left the remaining
    graph is summed directly.  The plain variant memoizes on a canonical
    relabeling for graphs with at most ``MEMO_VERTEX_LIMIT`` vertices.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    leaf = _VARIANTS[variant]
    use_memo = variant == PLAIN and G.vertex_count <= MEMO_VERTEX_LIMIT
    cache = {} if memo is None else memo
    rank = None if pivot_order is None else {e: i for i, e in enumerate(pivot_order)}

    def rec(H: StrandedGraph) -> MultiPoly:
        key = canonical_key(H) if use_memo else None
        if key is not None and key in cache:
            return cache[key]
        cands = pivot_candidates(H)
        if rank is not None:
            cands.sort(key=lambda e: (rank.get(e, len(rank)), _edge_sort_key(e)))
        if not cands:
            value = leaf(H, workers=1)
        else:
            e = cands[0]
            value = rec(H.delete(e)) + rec(H.contract(e))
        if key is not None:
            cache[key] = value
        return value

    return rec(G)


@dataclass
class EdgeCheck:
    edge: Hashable
    passed: bool
    whole: MultiPoly
    deleted: MultiPoly
    contracted: MultiPoly

    @property
    def diff(self) -> MultiPoly:
        return self.whole - (self.deleted + self.contracted)

    def to_dict(self) -> dict:
        return {"edge": str(self.edge), "passed": self.passed, "whole": self.whole.canonical_text(),
                "deleted": self.deleted.canonical_text(), "contracted": self.contracted.canonical_text(),
                "diff": self.diff.canonical_text()}


@dataclass
class DelContrReport:
    variant: str
    checks: List[EdgeCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[EdgeCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"variant": self.variant, "passed": self.passed, "edges_checked": len(self.checks),
                "checks": [c.to_dict() for c in self.checks]}


def verify_delcontr(G: StrandedGraph, variant: str = PLAIN) -> DelContrReport:
    """Check ``T_G = T_{G-e} + T_{G/e}`` by subset sums for every active regular edge."""
    fn = _VARIANTS[variant]
    whole = fn(G)
    report = DelContrReport(variant)
    for e in pivot_candidates(G):
        d, c = fn(G.delete(e)), fn(G.contract(e))
        report.checks.append(EdgeCheck(e, whole == d + c, whole, d, c))
    return report


# ---------------------------------------------------------------------------
# requests
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TPolyRequest:
    graph: StrandedGraph
    variant: str = PLAIN
    strategy: str = SUBSET
    pivot_order: Optional[Tuple[Hashable, ...]] = None

    def evaluate(self) -> MultiPoly:
        if self.variant not in _VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.strategy == SUBSET:
            return _VARIANTS[self.variant](self.graph)
        if self.strategy == DELCONTR:
            return t_polynomial_delcontr(self.graph, self.pivot_order, self.variant)
        if self.strategy == BOTH:
            a = _VARIANTS[self.variant](self.graph)
            b = t_polynomial_delcontr(self.graph, self.pivot_order, self.variant)
            if a != b:
                raise StrategyMismatchError(
                    f"subset sum and deletion/contraction disagree; difference {(a - b).canonical_text()}", a, b)
            return a
        raise ValueError(f"unknown strategy {self.strategy!r}")


def random_pivot_orders(G: StrandedGraph, count: int, rng: random.Random) -> List[Tuple[Hashable, ...]]:
    out = []
    for _ in range(count):
        ids = list(G.edge_ids)
        rng.shuffle(ids)
        out.append(tuple(ids))
    return out
