import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import stranded_graphs
from oracles import bfs_components, jacket_faces, strand_bubbles
from tensorpoly.errors import OperationError, OrientabilityError, StructureError
from tensorpoly.graph import REGULAR
from tensorpoly.stranded import (DEFAULT_TEMPLATE, LEGS, StrandedGraph, VertexTemplate, bubbles_by_color,
                                 disjoint_union, find_coloring, random_colored_graph, random_stranded_graph)


def corrupted_template(orientation_only=True):
    d = DEFAULT_TEMPLATE.to_dict()
    if orientation_only:
        # compose the 0 -> 1 face gluing with a swap of two corners (and fix its inverse)
        fwd = {int(a): b for a, b in d["gluing"]["0,1"].items()}
        fwd[2], fwd[3] = fwd[3], fwd[2]
        d["gluing"]["0,1"] = {str(a): b for a, b in fwd.items()}
        d["gluing"]["1,0"] = {str(b): a for a, b in fwd.items()}
    else:
        d["slots"]["0"] = [[1, 2], [1, 2], [2, 3]]
    return d


# ---------------------------------------------------------------------------
# template
# ---------------------------------------------------------------------------

def test_default_template_identities():
    t = DEFAULT_TEMPLATE
    t.validate()
    for f in LEGS:
        labels = t.slots[f]
        assert all(f not in lab and len(lab) == 2 for lab in labels)
        for s in range(3):
            other, s2 = t.segment(f, s)
            assert {f, other} == set(LEGS) - set(labels[s])
            assert t.segment(other, s2) == (f, s)
        for c in set(LEGS) - {f}:
            assert len(t.corner_slots(f, c)) == 2


def test_template_round_trip():
    assert VertexTemplate.from_dict(DEFAULT_TEMPLATE.to_dict()) == DEFAULT_TEMPLATE


def test_twisted_template_is_rejected():
    with pytest.raises(OrientabilityError, match="twists corner"):
        VertexTemplate.from_dict(corrupted_template())


def test_broken_slot_labels_rejected():
    with pytest.raises(StructureError, match="2-subsets"):
        VertexTemplate.from_dict(corrupted_template(orientation_only=False))


def test_slot_matchings_are_bijections():
    for l, m in itertools.product(LEGS, LEGS):
        assert sorted(DEFAULT_TEMPLATE.slot_matching(l, m)) == [0, 1, 2]


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def test_fixtures_validate(fig8, fig12):
    assert fig8.validate() and fig12.validate()


def test_dangling_and_reused_legs_rejected():
    with pytest.raises(StructureError, match="dangling"):
        StrandedGraph(1, [("a", (0, 0), (0, 1))], [(0, 2)])
    with pytest.raises(StructureError, match="used by both"):
        StrandedGraph(1, [("a", (0, 0), (0, 1)), ("b", (0, 1), (0, 2))], [(0, 3)])
    with pytest.raises(StructureError, match="passive"):
        StrandedGraph(1, [], [(0, l) for l in LEGS], frozenset({"x"}))


def test_underlying_multigraph(fig8, fig12):
    for G in (fig8, fig12):
        M = G.underlying_multigraph()
        assert M.vertex_count == 2 and all({u, v} == {0, 1} for _, u, v in M.edges) and len(M.edges) == 4
    loops = StrandedGraph(1, [("a", (0, 0), (0, 2)), ("b", (0, 1), (0, 3))])
    M = loops.underlying_multigraph()
    assert M.vertex_count == 1 and [(u, v) for _, u, v in M.edges] == [(0, 0), (0, 0)]


def test_jacket_faces_on_fig8(fig8):
    assert fig8.jacket().face_count() == 2
    assert fig8.jacket().underlying_multigraph().components() == 1
    assert fig8.jacket(["e2"]).face_count() == 1
    assert fig8.jacket([]).face_count() == 2
    triples = [fig8.jacket(A).face_count() for A in itertools.combinations(fig8.edge_ids, 3)]
    assert sorted(triples) == [1, 1, 3, 3]


def test_bubbles_of_fig8(fig8):
    bs = fig8.bubbles()
    assert bs.signatures() == [(2, 3, 1, 1), (6, 9, 5, 0)]
    assert sorted(b.genus for b in bs) == [0, 1]
    assert fig8.bubble_genus_sum() == 1
    assert fig8.is_manifold_dual() == "pseudo_manifold"
    empty = fig8.bubbles([])
    assert len(empty) == 8 and all(b.genus == 0 for b in empty)


def test_proper_subgraphs_of_fig8_have_no_closed_bubbles(fig8):
    for r in range(4):
        for A in itertools.combinations(fig8.edge_ids, r):
            assert fig8.bubble_genus_sum(A) == 0


def test_bubbles_of_fig12(fig12):
    bs = fig12.bubbles()
    assert len(bs) == 4 and all(b.genus == 0 for b in bs)
    assert fig12.bubble_genus_sum() == 0
    assert fig12.is_manifold_dual() == "manifold"
    assert fig12.jacket().face_count() == 4


def test_single_vertex_with_flags():
    G = StrandedGraph(1, [], [(0, l) for l in LEGS])
    assert G.is_manifold_dual() == "manifold"
    assert G.jacket().face_count() == 1


def test_coloring_of_fixtures(fig8, fig12):
    col = find_coloring(fig12)
    assert col is not None
    assert col.edge_colors == {"e0": 0, "e1": 1, "e2": 2, "e3": 3}
    assert sorted(col.vertex_signs.values()) == ["black", "white"]
    assert find_coloring(fig8) is None
    loop = StrandedGraph(2, [("a", (0, 0), (0, 2)), ("b", (0, 1), (1, 0)), ("c", (0, 3), (1, 1))], [(1, 2), (1, 3)])
    assert find_coloring(loop) is None


def test_color_bubbles_of_fig12(fig12):
    col = find_coloring(fig12)
    by_color = bubbles_by_color(fig12, col)
    assert len(by_color) == 4
    assert by_color.signatures() == fig12.bubbles().signatures()
    double = disjoint_union(fig12, fig12)
    assert len(bubbles_by_color(double, find_coloring(double))) == 8


def test_delete_and_contract(fig8):
    d = fig8.delete("e2")
    assert d.edge_ids == ("e0", "e1", "e3") and d.flags == ((0, 2), (1, 0))
    assert d.validate()
    c = fig8.contract("e2")
    assert c.passive == {"e2"} and c.active == ("e0", "e1", "e3")
    with pytest.raises(OperationError):
        c.contract("e2")
    with pytest.raises(OperationError):
        c.delete("e2")
    assert fig8.contract("e0").passive == {"e0"}


def test_strands_of_closed_graph_are_closed(fig8):
    strands = fig8.strands()
    assert all(s.closed for s in strands)
    assert sum(len(s.positions) for s in strands) == 24


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

@given(stranded_graphs())
def test_valence_is_conserved(G):
    def legs(H):
        used = [leg for e in H.edges for leg in (e.a, e.b)] + list(H.flags)
        return sorted(used)

    full = [(v, l) for v in range(G.vertex_count) for l in LEGS]
    assert legs(G) == full
    for e in G.active:
        assert legs(G.delete(e)) == full
        assert legs(G.contract(e)) == full


@given(stranded_graphs(), st.data())
def test_bubbles_partition_corners_and_match_strand_oracle(G, data):
    ids = list(G.edge_ids)
    A = data.draw(st.lists(st.sampled_from(ids), unique=True)) if ids else []
    bs = G.bubbles(A)
    corners = sorted(c for b in bs for c in b.corners)
    assert corners == [(v, c) for v in range(G.vertex_count) for c in LEGS]
    assert all(isinstance(b.genus, int) and b.genus >= 0 for b in bs)
    for b in bs:
        V, E, F, g = b.signature
        assert 2 - (V - E + F) == 2 * g
    closed = sorted(b.signature for b in bs if b.closed)
    assert closed == strand_bubbles(G, set(A))


@given(stranded_graphs(), st.data())
def test_jacket_matches_underlying_connectivity(G, data):
    ids = list(G.edge_ids)
    A = data.draw(st.lists(st.sampled_from(ids), unique=True)) if ids else []
    J = G.jacket(A).underlying_multigraph()
    M = G.underlying_multigraph()
    assert J.components() == M.components(A) == bfs_components(G.vertex_count, [M.endpoints(e) for e in A])
    assert J.nullity() == M.nullity(A)
    assert G.jacket(A).face_count() == jacket_faces(G, set(A))


@given(stranded_graphs())
def test_contract_is_neutral_on_full_edge_set(G):
    for e in G.active:
        C = G.contract(e)
        assert C.jacket() == G.jacket()
        assert C.bubbles().signatures() == G.bubbles().signatures()
        assert C.bubble_genus_sum() == G.bubble_genus_sum()


@given(stranded_graphs(max_vertices=4, max_edges=8))
def test_template_valid_graphs_never_raise_orientability(G):
    for r in range(min(len(G.edges), 3) + 1):
        for A in itertools.combinations(G.edge_ids, r):
            G.bubbles(A).genus_sum()
            G.jacket(A).genus()


@given(st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_color_and_corner_bubbles_agree(seed, n_white):
    G = random_colored_graph(n_white, random.Random(seed))
    col = find_coloring(G)
    assert col is not None
    assert bubbles_by_color(G, col).signatures() == G.bubbles().signatures()
    for v in range(G.vertex_count):
        colors = {col.leg_color(G.template, v, l) for l in LEGS}
        assert colors == set(LEGS)
    for e in G.edges:
        assert col.vertex_signs[e.a[0]] != col.vertex_signs[e.b[0]]


@given(st.integers(0, 2**32 - 1))
def test_generator_produces_valid_graphs(seed):
    rng = random.Random(seed)
    G = random_stranded_graph(rng.randint(0, 5), rng, n_flags=rng.choice([0, 2, 3]))
    assert G.validate()
    kinds = {G.classify_edge(e) for e in G.edge_ids}
    assert kinds <= {"bridge", "self_loop", REGULAR}
