import itertools
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from oracles import bfs_components, perm_faces, same, x, y, z
from tensorpoly.errors import ContractError, OrientabilityError, StructureError
from tensorpoly.graph import tutte_subset_sum
from tensorpoly.polynomial import X, Y, Z
from tensorpoly.ribbon import (RibbonGraph, br_delcontr, br_polynomial, euler_genus, is_regular, multivariate_br,
                               multivariate_br_delcontr, ribbon_contract, ribbon_delete, trace_boundaries)

ISOLATED = RibbonGraph([()])
BRIDGE_R = RibbonGraph([("a",), ("a'",)], [("e", "a", "a'")])
PLANAR_LOOP = RibbonGraph([("a", "a'")], [("e", "a", "a'")])
PLANAR_DOUBLE = RibbonGraph([("a", "a'", "b", "b'")], [("ea", "a", "a'"), ("eb", "b", "b'")])
INTERLEAVED = RibbonGraph([("a", "b", "a'", "b'")], [("ea", "a", "a'"), ("eb", "b", "b'")])
THETA = RibbonGraph([("p1", "p2", "p3"), ("q3", "q2", "q1")],
                    [("e1", "p1", "q1"), ("e2", "p2", "q2"), ("e3", "p3", "q3")])


@st.composite
def ribbon_graphs(draw, max_vertices=3, max_edges=7):
    """Random rotation systems: half-edges shuffled into vertices, paired, some left as flags."""
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    n_flags = draw(st.integers(0, 2))
    halves = [f"h{i}" for i in range(2 * m + n_flags)]
    rots = [[] for _ in range(n)]
    for h in halves:
        rots[rng.randrange(n)].append(h)
    for r in rots:
        rng.shuffle(r)
    order = halves[:]
    rng.shuffle(order)
    edges = [(f"e{i}", order[2 * i], order[2 * i + 1]) for i in range(m)]
    return RibbonGraph(rots, edges, order[2 * m:])


def test_boundary_examples():
    assert trace_boundaries(ISOLATED).F == 1
    assert trace_boundaries(INTERLEAVED).F == 1
    assert trace_boundaries(PLANAR_DOUBLE).F == 3


def test_genus_examples():
    (c,) = euler_genus(INTERLEAVED)
    assert (c.vertices, c.edges, c.faces, c.chi, c.genus) == (1, 2, 1, 0, 1)
    assert [g.genus for g in euler_genus(PLANAR_DOUBLE)] == [0]


def test_br_examples():
    assert br_polynomial(BRIDGE_R) == X
    assert br_polynomial(PLANAR_DOUBLE) == 1 + 2 * Y + Y**2
    assert br_polynomial(INTERLEAVED) == 1 + 2 * Y + Y**2 * Z**2


def test_multivariate_br_examples():
    b = sympy.Symbol("beta:e")
    assert same(multivariate_br(ISOLATED), x * z)
    assert same(multivariate_br(BRIDGE_R), x**2 * z**2 + x * z * b)
    assert same(multivariate_br(PLANAR_LOOP), x * z + x * z**2 * b)


def test_delete_and_contract_examples():
    d = ribbon_delete(INTERLEAVED, "ea")
    assert d.rotations == (("b", "b'"),) and d.face_count() == 2
    c = ribbon_contract(BRIDGE_R, "e")
    assert c.rotations == ((),) and c.face_count() == 1
    t = ribbon_contract(THETA, "e1")
    assert t.rotations == (("p2", "p3", "q3", "q2"),)
    assert br_polynomial(THETA) == br_polynomial(ribbon_delete(THETA, "e1")) + br_polynomial(t)
    with pytest.raises(ContractError):
        ribbon_contract(PLANAR_LOOP, "e")


def test_structure_errors():
    with pytest.raises(StructureError):
        RibbonGraph([("a", "a")])
    with pytest.raises(StructureError):
        RibbonGraph([("a", "b")], [("e", "a", "b")], ["a"])
    with pytest.raises(StructureError):
        RibbonGraph([("a", "b")], [("e", "a", "a'")])
    with pytest.raises(StructureError):
        RibbonGraph([("a",)])


def test_odd_euler_characteristic_is_an_orientability_error():
    # a rotation that is not a permutation of the edge ends cannot arise, so
    # fake one by corrupting the face count through a subclass
    class Broken(RibbonGraph):
        def trace_boundaries(self):
            rep = super().trace_boundaries()
            return type(rep)(rep.F + 1, rep.walks + ((),), rep.walk_vertex + (0,), rep.open_walks)

    with pytest.raises(OrientabilityError):
        Broken([("a", "a'")], [("e", "a", "a'")]).euler_genus()


def test_flags_do_not_split_faces():
    with_flag = RibbonGraph([("a", "f", "a'")], [("e", "a", "a'")], ["f"])
    assert with_flag.face_count() == PLANAR_LOOP.face_count() == 2
    assert RibbonGraph([("f",)], [], ["f"]).face_count() == 1


@given(ribbon_graphs())
def test_faces_match_permutation_oracle(R):
    present = [[h for h in rot if R.partner(h) is not None] for rot in R.rotations]
    pairs = [(a, b) for _, a, b in R.edges]
    assert R.face_count() == perm_faces(present, pairs)


@given(ribbon_graphs())
def test_every_side_visited_once(R):
    rep = R.trace_boundaries()
    visited = [h for w in rep.walks for h in w]
    assert sorted(visited) == sorted(h for _, a, b in R.edges for h in (a, b))


@given(ribbon_graphs())
def test_z_exponents_even_and_genus_identity(R):
    p = br_polynomial(R)
    assert all(e % 2 == 0 and e >= 0 for e in p.exponents_of("z"))
    G = R.underlying_multigraph()
    assert G.components() - R.face_count() + G.nullity() == 2 * R.genus()


@given(ribbon_graphs(max_edges=6))
def test_br_at_z_one_is_shifted_tutte(R):
    # BR carries y^n where Tutte carries (y-1)^n
    lhs = br_polynomial(R).substitute({"z": 1, "y": Y - 1})
    assert lhs == tutte_subset_sum(R.underlying_multigraph())


@given(ribbon_graphs(max_edges=7))
def test_deletion_contraction_on_regular_edges(R):
    P = br_polynomial(R)
    for e in R.edge_ids:
        if is_regular(R, e):
            assert P == br_polynomial(ribbon_delete(R, e)) + br_polynomial(ribbon_contract(R, e))


@given(ribbon_graphs(max_edges=5))
def test_recursive_evaluators_agree(R):
    assert br_delcontr(R) == br_polynomial(R)
    assert multivariate_br_delcontr(R) == multivariate_br(R)


@given(ribbon_graphs(max_edges=5))
def test_br_against_brute_force(R):
    V = R.vertex_count
    vof = {h: v for v, rot in enumerate(R.rotations) for h in rot}
    kG = bfs_components(V, [(vof[a], vof[b]) for _, a, b in R.edges])
    want = 0
    for r in range(len(R.edges) + 1):
        for H in itertools.combinations(R.edges, r):
            keep = {h for _, a, b in H for h in (a, b)}
            present = [[h for h in rot if h in keep] for rot in R.rotations]
            F = perm_faces(present, [(a, b) for _, a, b in H])
            k = bfs_components(V, [(vof[a], vof[b]) for _, a, b in H])
            n = len(H) - V + k
            want += (x - 1) ** (k - kG) * y**n * z ** (k - F + n)
    assert same(br_polynomial(R), want)
