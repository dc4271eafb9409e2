import random

import pytest
from hypothesis import given, settings, strategies as st

from chromahom.graphs import (
    GraphError, all_graphs, build_graph, canonical_form, complete, edge_product, family, format_edge_list,
    four_cycles, girth, gk_graph, isomorphic, one_vertex_product, parse_edge_list, polygon, random_graph,
    stats, triangles, two_vertex_product, wheel,
)
from oracles import naive_stats


@st.composite
def graphs(draw, max_v=8):
    v = draw(st.integers(1, max_v))
    pairs = [(a, b) for a in range(v) for b in range(a + 1, v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(v, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_stats_match_naive_counts(g):
    s = stats(g)
    ref = naive_stats(g.v, list(g.edges))
    for k, val in ref.items():
        assert getattr(s, k) == val, k


@settings(max_examples=100, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_stats_invariant_under_relabel(g, rnd):
    perm = list(range(g.v))
    rnd.shuffle(perm)
    assert stats(g) == stats(g.relabel(perm))
    assert isomorphic(g, g.relabel(perm))


def test_build_graph_validation():
    g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.had_duplicates
    with pytest.raises(GraphError):
        build_graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(2, [(0, 2)])


def test_edge_list_round_trip():
    g = wheel(6)
    assert parse_edge_list(format_edge_list(g)) == g
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("")


def test_family_sizes():
    cases = {"P7": (7, 7), "K5": (5, 10), "W8": (8, 14), "Wout8": (8, 13), "Win8": (8, 13),
             "Pt:8": (9, 10), "Gts:3": (9, 12), "Gk:2": (12, 25), "L4": (4, 3), "E3": (3, 0)}
    for desc, (v, e) in cases.items():
        g = family(desc)
        assert (g.v, g.E) == (v, e), desc
        assert str(g) == desc
    with pytest.raises(GraphError):
        family("X3")


def test_known_stats():
    s = stats(complete(4))
    assert (s.t3, s.sq, s.sqprime, s.girth, s.p1) == (4, 3, 3, 3, 3)
    s = stats(polygon(5))
    assert (s.t0 + s.t1 + s.t2, s.girth, s.p0bi) == (10, 5, 0)
    assert stats(polygon(6)).p0bi == 1
    assert girth(build_graph(4, [(0, 1), (1, 2)])) == float("inf")


def test_cycle_enumeration():
    assert len(triangles(complete(5))) == 10
    assert len(four_cycles(complete(5))) == 15
    assert all(c[0] == min(c) and c[1] < c[3] for c in four_cycles(complete(5)))


def test_products():
    k3 = complete(3)
    g = one_vertex_product(k3, 0, k3, 0)
    assert (g.v, g.E) == (5, 6)
    d = edge_product(k3, 0, k3, 0)
    assert isomorphic(d, family("Pt:3"))
    assert isomorphic(edge_product(k3, 0, polygon(4), 0), family("Pt:4"))
    a = two_vertex_product(polygon(4), 0, 1, polygon(5), 0, 2)
    b = two_vertex_product(polygon(4), 0, 1, polygon(5), 0, 2, flip=True)
    assert a.v == b.v == 7
    with pytest.raises(GraphError):
        two_vertex_product(k3, 0, 0, k3, 0, 1)


def test_gk_shape():
    for k in range(1, 5):
        g = gk_graph(k)
        assert g.v == 4 * (k + 1)
        assert g.E == 8 * (k + 1) + k - 1


def test_atlas_counts():
    # unlabeled graphs on 1..5 vertices: 1, 2, 4, 11, 34
    counts = {}
    for g in all_graphs(5):
        counts[g.v] = counts.get(g.v, 0) + 1
    assert counts == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    assert len({canonical_form(g) for g in all_graphs(5, 5)}) == 34


def test_random_graph_deterministic():
    a = random_graph(random.Random(7), 8)
    b = random_graph(random.Random(7), 8)
    assert a == b
