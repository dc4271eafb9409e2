"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line (printed in the terminal summary and on
stdout) before asserting, so a failing criterion still reports what differed.
"""
import time

import pytest

from chromahom import closed_forms as cf, complex as cx, harness
from chromahom.cells import boundary_quotient_grid, h1, h2, torus_grid
from chromahom.graphs import family, gk_graph
from chromahom.homology import AbelianGroup, equal, parse_group
from conftest import ACCEPTANCE_LINES


def report(n, title, failures, start):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {n} [{status}] {title} ({time.time() - start:.1f}s)"
    if failures:
        line += ": " + "; ".join(failures[:6]) + (" ..." if len(failures) > 6 else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def fixture_group(graph, m, j):
    for r in harness.reference_values()["groups"]:
        if (r["graph"], r["m"], r["j"], r.get("convention", "cohomology")) == (graph, m, j, "cohomology"):
            return parse_group(r["group"])
    raise KeyError((graph, m, j))


def test_criterion_1_polygons():
    t = time.time()
    recs = harness.verify("polygon")
    bad = [f"{r.graph} {r.params}" for r in recs if not r.equal]
    # the torsion must sit exactly at j = (v-i)m/2 with v-i even
    for m in (2, 3, 4):
        for v in range(3, 8):
            g = family(f"P{v}")
            for i in range(1, v - 1):
                for j in cx.nonempty_gradings(g, m, i):
                    tor = cx.cohomology(g, m, i, j).torsion
                    want = (v - i) % 2 == 0 and 2 * j == (v - i) * m
                    if (tor == AbelianGroup(0, (m,))) != want or (not want and not tor.is_trivial()):
                        bad.append(f"P{v} m={m} i={i} j={j}: torsion {tor}")
    report(1, f"polygons vs Hochschild, {len(recs)} groups", bad, t)


def test_criterion_2_a2_top():
    t = time.time()
    recs = harness.verify("thm31")
    report(2, f"A_2 top gradings, {len(recs)} groups", [f"{r.graph} {r.params}" for r in recs if not r.equal], t)


def test_criterion_3_a3_top():
    t = time.time()
    recs = harness.verify("thm41")
    report(3, f"A_3 top gradings via X_Δ,4, {len(recs)} groups",
           [f"{r.graph} {r.params}" for r in recs if not r.equal], t)


def test_criterion_4_published_groups():
    t = time.time()
    bad = []
    for graph, m, j in (("K4", 3, 5), ("K5", 3, 7), ("K3", 3, 3)):
        got = cx.cohomology(family(graph), m, 1, j)
        if not equal(got, fixture_group(graph, m, j)):
            bad.append(f"{graph}: {got}")
    table = harness.reference_values()["tables"]["wheels"]["rows"]
    for n in range(4, 9):
        g = family(f"W{n}")
        got = cx.cohomology(g, 3, 1, 2 * n - 3)
        if not equal(got, parse_group(table[str(n)][-1])):
            bad.append(f"W{n} vs table: {got}")
        # the parity formula is stated for every n, but at n = 4 it contradicts
        # both the K4 value and the table; it is checked from n = 5 on
        if n >= 5 and not equal(got, cf.wheel_formula(n).group):
            bad.append(f"W{n} vs parity formula: {got}")
    report(4, "K3, K4, K5 and wheel top groups n=4..8", bad, t)


def test_criterion_5_small_tables():
    t = time.time()
    bad = []
    notes = []
    for tid, hi in (("pt", 8), ("gts", 4)):
        rep = harness.run_table(tid, range(0, hi + 1))
        for row in rep.rows:
            optional = (tid, row.param) in (("pt", 8), ("gts", 4))
            for c in row.cells:
                if c.status == "differs":
                    bad.append(f"{row.graph} {c.label}: computed {c.computed}, table {c.expected}")
                elif c.status == "skipped":
                    (notes if optional else bad).append(f"{row.graph} {c.label} skipped")
            if not row.width_complete:
                (notes if optional else bad).append(f"{row.graph} width incomplete")
            elif row.width != row.width_expected:
                bad.append(f"{row.graph} width {row.width}, conjectured {row.width_expected}")
    if notes:
        print("permitted skips:", "; ".join(notes))
    report(5, "P_t,k (k<=8) and G_t,s^k (k<=4) tables and widths", bad, t)


def test_criterion_6_gk_family():
    t = time.time()
    bad = []
    for k in (2, 3):
        g = gk_graph(k)
        got = cx.cohomology(g, 3, 1, 8 * (k + 1) - 3)
        want = AbelianGroup.from_factors(5 * k + 5, [6 * k + 6] + [3] * (4 * k + 2))
        if not equal(got, want):
            bad.append(f"G_{k}: {got} != {want}")
    for k in range(1, 8):
        if not equal(cf.a3_theorem41(gk_graph(k))[1], fixture_group(f"Gk:{k}", 3, 8 * (k + 1) - 3)):
            bad.append(f"G_{k} cell route differs from fixture")
    report(6, "G_k brute force k=2,3 and seven published groups", bad, t)


def test_criterion_7_meshes():
    t = time.time()
    bad = []
    rp2 = boundary_quotient_grid(5, 2)
    a = h1(rp2.presentation())
    if len(rp2.faces) != 25 or a.torsion != AbelianGroup(0, (2,)):
        bad.append(f"projective plane: {len(rp2.faces)} faces, h1 {a}")
    b = h1(torus_grid(4).presentation())
    if b.invariant_factors or b.rank != 2:
        bad.append(f"torus: h1 {b}")
    report(7, "quad-meshed projective plane and torus", bad, t)


def test_criterion_8_property_suites():
    t = time.time()
    bad = []
    total = 0
    for suite in harness.PROPERTY_SUITES:
        recs = harness.verify(suite)
        total += len(recs)
        if not recs:
            bad.append(f"{suite}: no records")
        bad += [f"{suite} {r.graph} {r.params}" for r in recs if not r.equal]
    report(8, f"property suites ({len(harness.PROPERTY_SUITES)} suites, {total} records)", bad, t)


def test_criterion_9_conjecture_scans():
    t = time.time()
    bad = []
    for cid, lo, hi in (("8.9", 3, 8), ("8.10", 2, 8), ("8.11", 4, 6), ("8.7", 5, 6)):
        rep = harness.conjecture(cid, lo, hi)
        bad += [f"{cid} param {x.param} {x.graph}: {x.computed} vs {x.expected} ({x.status})"
                for x in rep.instances if x.status != "confirmed"]
    got = cx.cohomology(family("Pt:3"), 2, 1, 3)
    if not equal(got, fixture_group("Pt:3", 2, 3)):
        bad.append(f"diagonal square over A_2: {got}")
    report(9, "conjectures 8.9 (m<=8), 8.10 (m<=8), 8.11 (m<=6), 8.7 (n<=6)", bad, t)
