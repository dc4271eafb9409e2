import random

import pytest

from chromahom import closed_forms as cf
from chromahom.cells import square_cordial
from chromahom.graphs import all_graphs, complete, family, gk_graph, polygon, random_graph, wheel
from chromahom.homology import AbelianGroup, parse_group
from oracles import naive_cohomology


def brute(g, m, i, j):
    rank, tors = naive_cohomology(g.v, list(g.edges), m, i, j)
    return AbelianGroup.from_factors(rank, tors)


def test_hochschild_values():
    assert cf.hochschild_Am(3, 0, 0) == AbelianGroup.free(1)
    assert cf.hochschild_Am(3, 0, 2) == AbelianGroup.free(1)
    assert cf.hochschild_Am(3, 1, 3) == AbelianGroup(0, (3,))
    assert cf.hochschild_Am(3, 2, 5) == AbelianGroup.free(1)
    assert cf.hochschild_Am(3, 2, 6).is_trivial()
    with pytest.raises(cf.OutOfRange):
        cf.hochschild_Am(1, 0, 0)


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("v", [3, 4, 5])
def test_polygon_against_naive_oracle(m, v):
    for i in range(1, v):
        for j in range(0, v * (m - 1) + 1):
            assert brute(polygon(v), m, i, j) == cf.polygon_cohomology(m, v, i, j), (i, j)


def test_polygon_torsion_position():
    # Z_m exactly at j = (v-i)m/2 when v-i is even
    for m in (2, 3, 4):
        for v in range(3, 8):
            for i in range(1, v - 1):
                for j in range(0, v * (m - 1) + 1):
                    t = cf.polygon_cohomology(m, v, i, j).torsion
                    want = (v - i) % 2 == 0 and 2 * j == (v - i) * m
                    assert (t == AbelianGroup(0, (m,))) == want


def test_a2_and_a3_against_naive_oracle():
    rng = random.Random(11)
    graphs = list(all_graphs(4, 2)) + [random_graph(rng, 5) for _ in range(15)]
    for g in graphs:
        h0, h1 = cf.a2_theorem31(g)
        assert brute(g, 2, 0, g.v - 1) == h0
        assert brute(g, 2, 1, g.v - 1) == h1
        h0, h1 = cf.a3_theorem41(g)
        assert brute(g, 3, 0, 2 * g.v - 3) == h0
        assert brute(g, 3, 1, 2 * g.v - 3) == h1


def test_named_families():
    assert str(cf.complete_graph(5).group) == "Z_3^3 + Z_6 + Z^10"
    assert cf.complete_graph(4).path == "formula"
    assert cf.complete_graph(3).path == "fallback:a3-top"
    assert cf.complete_graph(3).group == AbelianGroup(0, (3,))
    assert cf.wheel_formula(5).group == parse_group("Z_3^3 + Z^5")
    assert cf.wheel_formula(6).group == parse_group("Z_2 + Z_3^5 + Z^5")
    # the even-n shortcut does not cover the cone over a triangle
    assert cf.wheel_formula(4).path == "fallback:a3-top"
    assert cf.wheel_formula(4).group == parse_group("Z_3^2 + Z_6 + Z^2")
    assert cf.gk(2).group == parse_group("Z_18 + Z_3^10 + Z^15")
    assert cf.gk(1).group == cf.a3_theorem41(gk_graph(1))[1]
    for k in range(2, 6):
        assert cf.gk(k).group == cf.a3_theorem41(gk_graph(k))[1]


def test_square_cordial_form_agrees_with_cell_route():
    for g in all_graphs(6, 2):
        if square_cordial(g):
            assert cf.square_cordial_form(g).group == cf.a3_theorem41(g)[1]
    with pytest.raises(cf.OutOfRange):
        cf.square_cordial_form(polygon(4))


def test_vanishing_bound():
    g = polygon(5)
    assert cf.vanishing_bound(g, 3, 1, 8)
    assert not cf.vanishing_bound(g, 3, 1, 7)
    with pytest.raises(cf.OutOfRange):
        cf.vanishing_bound(g, 2, 1, 4)
    with pytest.raises(cf.OutOfRange):
        cf.vanishing_bound(complete(3), 3, 3, 0)


def test_result_record():
    r = cf.complete_graph(4)
    assert r.to_json()["provenance"] == "complete-graph"
    with pytest.raises(ValueError):
        cf.ClosedFormResult(AbelianGroup.zero(), "folklore")
