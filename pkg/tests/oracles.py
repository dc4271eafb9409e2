"""Deliberately naive reference implementations used only by the tests.

Nothing here imports the package's linear algebra or complex builder: states
are dicts keyed by vertex sets, components come from networkx, and invariant
factors come from sympy.
"""
from itertools import combinations, product

import networkx as nx
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def _components(v, edges, s):
    h = nx.Graph()
    h.add_nodes_from(range(v))
    h.add_edges_from(edges[e] for e in s)
    return [frozenset(c) for c in nx.connected_components(h)]


def _grading(variant, m, i, comps, weights):
    if variant == "dichromatic":
        return (m - 1) * (i + len(comps)) - sum(weights)
    return sum(weights)


def naive_basis(v, edges, m, i, j, variant="chromatic"):
    out = []
    if i < 0:
        return out
    for s in combinations(range(len(edges)), i):
        comps = sorted(_components(v, edges, s), key=min)
        for w in product(range(m), repeat=len(comps)):
            if _grading(variant, m, i, comps, w) == j:
                out.append((frozenset(s), frozenset(zip(comps, w))))
    return out


def naive_differential(v, edges, m, i, j, variant="chromatic"):
    src = naive_basis(v, edges, m, i, j, variant)
    dst = naive_basis(v, edges, m, i + 1, j, variant)
    where = {b: n for n, b in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for col, (s, dec) in enumerate(src):
        weight = dict(dec)
        for e in range(len(edges)):
            if e in s:
                continue
            sign = (-1) ** sum(1 for f in s if f < e)
            a, b = edges[e]
            ca = next(c for c in weight if a in c)
            cb = next(c for c in weight if b in c)
            new = dict(weight)
            if ca != cb:
                total = weight[ca] + weight[cb]
                if total >= m:
                    continue
                del new[ca], new[cb]
                new[ca | cb] = total
            elif variant == "hat":
                continue
            elif variant == "dichromatic":
                if weight[ca] + m - 1 >= m:
                    continue
                new[ca] = weight[ca] + m - 1
            key = (s | {e}, frozenset(new.items()))
            mat[where[key]][col] += sign
    return mat, len(src), len(dst)


def _rank_and_factors(mat, nrows, ncols):
    if nrows == 0 or ncols == 0:
        return 0, []
    M = Matrix(mat)
    if M.is_zero_matrix:
        return 0, []
    facs = [abs(int(x)) for x in invariant_factors(M, domain=ZZ)]
    nz = [x for x in facs if x]
    return len(nz), sorted(x for x in nz if x > 1)


def naive_cohomology(v, edges, m, i, j, variant="chromatic"):
    """(rank, torsion factors) of H^{i,j}."""
    d_in, _, n_i = naive_differential(v, edges, m, i - 1, j, variant)
    d_out, n_i2, n_next = naive_differential(v, edges, m, i, j, variant)
    r_in, tors = _rank_and_factors(d_in, n_i, len(d_in[0]) if d_in else 0)
    r_out, _ = _rank_and_factors(d_out, n_next, n_i2)
    return n_i2 - r_in - r_out, tors


def naive_cokernel(rows, ncols):
    """(rank, torsion factors) of Z^ncols / rowspace(rows)."""
    if not rows:
        return ncols, []
    r, tors = _rank_and_factors(rows, len(rows), ncols)
    return ncols - r, tors


def naive_stats(v, edges):
    """Exhaustive counts straight from the definitions."""
    es = {frozenset(e) for e in edges}
    t = [0, 0, 0, 0]
    for tri in combinations(range(v), 3):
        t[sum(1 for p in combinations(tri, 2) if frozenset(p) in es)] += 1
    g = nx.Graph()
    g.add_nodes_from(range(v))
    g.add_edges_from(edges)
    dist = dict(nx.all_pairs_shortest_path_length(g))
    d = {1: 0, 2: 0, 3: 0}
    for a in range(v):
        for b in range(v):
            if a != b:
                d[min(dist[a].get(b, 99), 3)] += 1
    sq = sqp = 0
    for quad in combinations(range(v), 4):
        a = quad[0]
        for x, b, y in ((quad[1], quad[2], quad[3]), (quad[1], quad[3], quad[2]), (quad[2], quad[1], quad[3])):
            cyc = [a, x, b, y]
            if all(frozenset((cyc[k], cyc[(k + 1) % 4])) in es for k in range(4)):
                sq += 1
                if frozenset((a, b)) in es or frozenset((x, y)) in es:
                    sqp += 1
    try:
        gi = min(len(c) for c in nx.minimum_cycle_basis(g)) if g.number_of_edges() else float("inf")
    except ValueError:
        gi = float("inf")
    return {"t0": t[0], "t1": t[1], "t2": t[2], "t3": t[3], "d1": d[1], "d2": d[2],
            "dge3": d[3], "sq": sq, "sqprime": sqp, "girth": gi}
