import random

import pytest
from hypothesis import given, settings, strategies as st

from chromahom import complex as cx
from chromahom.graphs import build_graph, complete, family, polygon, random_graph
from chromahom.homology import AbelianGroup, parse_group
from oracles import naive_basis, naive_cohomology, naive_differential


@st.composite
def small_cases(draw):
    v = draw(st.integers(2, 5))
    pairs = [(a, b) for a in range(v) for b in range(a + 1, v)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=7))
    g = build_graph(v, edges)
    m = draw(st.integers(2, 4))
    i = draw(st.integers(0, min(g.E, 3)))
    j = draw(st.integers(0, v * (m - 1)))
    variant = draw(st.sampled_from(cx.VARIANTS))
    return g, m, i, j, variant


@settings(max_examples=120, deadline=None)
@given(small_cases())
def test_cohomology_matches_naive_oracle(case):
    g, m, i, j, variant = case
    rank, tors = naive_cohomology(g.v, list(g.edges), m, i, j, variant)
    assert cx.cohomology(g, m, i, j, variant) == AbelianGroup.from_factors(rank, tors)


@settings(max_examples=80, deadline=None)
@given(small_cases())
def test_basis_sizes_match_naive(case):
    g, m, i, j, variant = case
    assert cx.basis_size(g, m, i, j, variant) == len(naive_basis(g.v, list(g.edges), m, i, j, variant))
    assert len(cx.enumerate_basis(g, m, i, j, variant)) == cx.basis_size(g, m, i, j, variant)


@settings(max_examples=80, deadline=None)
@given(small_cases())
def test_differential_entries_up_to_basis_order(case):
    # same multiset of nonzero column patterns, independent of basis ordering
    g, m, i, j, variant = case
    mat, _, _ = naive_differential(g.v, list(g.edges), m, i, j, variant)
    d = cx.differential(g, m, j, i, variant)
    ours = sorted(sorted(v for v in col.values()) for col in d.T.rows)
    theirs = sorted(sorted(x for x in col if x) for col in zip(*mat)) if mat else []
    if mat:
        assert ours == theirs
    else:
        assert d.nrows == 0 or d.is_zero()


@settings(max_examples=60, deadline=None)
@given(small_cases())
def test_d_squared_zero(case):
    g, m, i, j, variant = case
    d0 = cx.differential(g, m, j, i, variant)
    d1 = cx.differential(g, m, j, i + 1, variant)
    assert (d1 @ d0).is_zero()


def test_reference_groups():
    assert str(cx.cohomology(family("K4"), 3, 1, 5)) == "Z_3^2 + Z_6 + Z^2"
    assert cx.cohomology(family("P5"), 2, 1, 4) == AbelianGroup(0, (2,))
    assert cx.cohomology(family("P4"), 3, 1, 5) == AbelianGroup.free(1)
    assert cx.homology(family("K3"), 3, 0, 3) == parse_group("Z + Z_3")


def test_torsion_h1_is_torsion_of_full_group():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(3, 6))
        for j in cx.nonempty_gradings(g, 3, 1):
            assert cx.torsion_h1(g, 3, j) == cx.cohomology(g, 3, 1, j).torsion


def test_slice_complex():
    sl = cx.slice_complex(complete(4), 3, 5, 1)
    assert sl.cohomology(1) == cx.cohomology(complete(4), 3, 1, 5)
    assert sl.homology(1) == cx.homology(complete(4), 3, 1, 5)
    assert sl.rank(1) == cx.basis_size(complete(4), 3, 1, 5)


def test_enhanced_state_gradings():
    for s in cx.enumerate_basis(polygon(4), 3, 2, 3):
        assert s.degree == 2 and s.quantum == 3


def test_weight_total_dichromatic():
    # j = (m-1)(i+k) - sum
    assert cx.weight_total("dichromatic", 3, 1, 2, 4) == 2
    assert cx.weight_total("chromatic", 3, 1, 2, 4) == 4


def test_unknown_variant():
    with pytest.raises(cx.UnknownVariant):
        cx.cohomology(polygon(3), 2, 1, 1, "bogus")


def test_out_of_range_degrees_are_zero():
    g = polygon(4)
    assert cx.cohomology(g, 3, 7, 3).is_trivial()
    assert cx.basis_size(g, 3, -1, 0) == 0
    assert cx.nonempty_gradings(g, 3, 9) == []
