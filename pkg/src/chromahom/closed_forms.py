"""Closed-form groups, usable as oracles against the brute-force complex.

Every public function returns exact groups.  The shortcut formulas check their
own range and otherwise fall back to the general top-grading formula over A_3,
recording which route was taken in ``ClosedFormResult.path``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cells import coherence, edges_off_triangles, h1, h2, presentation, square_cordial
from .graphs import SimpleGraph, complete, gk_graph, girth, stats, triangles_on_edge, wheel
from .homology import AbelianGroup, tensor_zp

PROVENANCE = (
    "hochschild",        # HH_*(A_m)
    "polygon",           # polygons vs HH_*(A_m)
    "a2-top",            # A_2 at grading v-1
    "a3-top",            # A_3 at grading 2v-3 through the cell complex
    "complete-graph",
    "wheel",
    "gk-family",
    "square-cordial",
    "vanishing",
)


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class ClosedFormResult:
    group: AbelianGroup
    provenance: str
    inputs: dict = field(default_factory=dict)
    path: str = "formula"  # "formula" or "fallback:a3-top"

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "provenance": self.provenance,
                "inputs": self.inputs, "path": self.path}


Z = AbelianGroup.free(1)
ZERO = AbelianGroup.zero()


def hochschild_Am(m: int, i: int, j: int) -> AbelianGroup:
    """HH_{i,j}(A_m)."""
    if m < 2 or i < 0:
        raise OutOfRange("need m >= 2 and i >= 0")
    if i % 2 == 1 and 2 * j == (i + 1) * m:
        return AbelianGroup.from_factors(0, [m])
    if i == 0 and j == 0:
        return Z
    lo = (i // 2) * m + 1
    if lo <= j <= lo + m - 2:
        return Z
    return ZERO


def polygon_cohomology(m: int, v: int, i: int, j: int, variant: str = "chromatic") -> AbelianGroup:
    """H^{i,j} of the v-gon, for 0 < i <= v-1."""
    if v < 3:
        raise OutOfRange("polygon needs v >= 3")
    if not 0 < i <= v - 1:
        raise OutOfRange(f"degree {i} outside 1..{v - 1}")
    if variant not in ("chromatic", "hat"):
        raise OutOfRange("polygon formula covers the chromatic and hat variants")
    if i == v - 1:
        return hochschild_Am(m, 0, j) if variant == "hat" else ZERO
    return hochschild_Am(m, v - 1 - i, j)


def a2_theorem31(g: SimpleGraph) -> tuple[AbelianGroup, AbelianGroup]:
    """(H^{0,v-1}, H^{1,v-1}) over A_2."""
    s = stats(g)
    odd = s.p0 - s.p0bi
    return AbelianGroup.free(s.p0bi), AbelianGroup.from_factors(s.p1 - odd, [2] * odd)


def a3_theorem41(g: SimpleGraph) -> tuple[AbelianGroup, AbelianGroup]:
    """(H^{0,2v-3}, H^{1,2v-3}) over A_3, read off the triangle/square complex."""
    if g.v < 2:
        raise OutOfRange("need v >= 2")
    s = stats(g)
    p = presentation(g, "Δ4")
    hh1 = h1(p)
    hh2 = h2(p)
    h0_top = AbelianGroup.free(hh1.rank + s.t0 + s.d2 // 2 + s.dge3)
    rank = hh2 + s.t2 - s.d2 // 2 - s.sq
    if rank < 0:
        raise ArithmeticError(f"negative rank {rank}; the cell complex is inconsistent")
    return h0_top, AbelianGroup(rank, hh1.invariant_factors)


def _fallback(g: SimpleGraph, provenance: str, inputs: dict) -> ClosedFormResult:
    return ClosedFormResult(a3_theorem41(g)[1], provenance, inputs, "fallback:a3-top")


def complete_graph(n: int) -> ClosedFormResult:
    """H^{1,2n-3}_{A_3}(K_n)."""
    if n < 2:
        raise OutOfRange("K_n needs n >= 2")
    inputs = {"n": n, "m": 3, "i": 1, "j": 2 * n - 3}
    if n < 4:
        return _fallback(complete(n), "complete-graph", inputs)
    g = AbelianGroup.from_factors(n * (n - 1) * (2 * n - 7) // 6, [2] + [3] * (n - 1))
    return ClosedFormResult(g, "complete-graph", inputs)


def wheel_formula(n: int) -> ClosedFormResult:
    """H^{1,2n-3}_{A_3}(W_n), W_n the cone over an (n-1)-gon.

    The parity formula needs n >= 5; W_4 = K_4 goes through the general route.
    """
    if n < 4:
        raise OutOfRange("wheel needs n >= 4")
    inputs = {"n": n, "m": 3, "i": 1, "j": 2 * n - 3}
    if n == 4:
        return _fallback(wheel(4), "wheel", inputs)
    if n % 2:
        g = AbelianGroup.from_factors(n, [3] * (n - 2))
    else:
        g = AbelianGroup.from_factors(n - 1, [3] * (n - 1) + [2])
    return ClosedFormResult(g, "wheel", inputs)


def gk(k: int) -> ClosedFormResult:
    """H^{1,8(k+1)-3}_{A_3}(G_k)."""
    if k < 1:
        raise OutOfRange("G_k needs k >= 1")
    inputs = {"k": k, "m": 3, "i": 1, "j": 8 * (k + 1) - 3}
    if k == 1:
        return _fallback(gk_graph(1), "gk-family", inputs)
    g = AbelianGroup.from_factors(5 * k + 5, [6 * k + 6] + [3] * (4 * k + 2))
    return ClosedFormResult(g, "gk-family", inputs)


def hat3_z3_dim(g: SimpleGraph) -> int:
    """dim H_1(X^_3; Z_3) for the graph with a 2-cell on every triangle."""
    return tensor_zp(h1(presentation(g, "hat-3")), 3)


def square_cordial_h1(g: SimpleGraph) -> AbelianGroup:
    """H_1 of the vertex-identified triangle complex of a square-cordial graph.

    Edges on no triangle (f of them) stay free, and each component of G
    contributes one vertex less to the Z_3 count.
    """
    if not square_cordial(g):
        raise OutOfRange("graph is not square-cordial")
    p0d, coh = coherence(g)
    f = edges_off_triangles(g)
    p0 = stats(g).p0
    n3 = g.v - p0 + hat3_z3_dim(g) - coh - f
    return AbelianGroup.from_factors(coh + f, [2] * (p0d - coh) + [3] * n3)


def square_cordial_form(g: SimpleGraph) -> ClosedFormResult:
    """H^{1,2v-3}_{A_3} of a square-cordial graph from coherence data alone."""
    if not square_cordial(g):
        raise OutOfRange("graph is not square-cordial")
    s = stats(g)
    base = square_cordial_h1(g)
    rank = base.rank + s.t2 + 2 * s.t3 - s.E - s.d2 // 2
    return ClosedFormResult(AbelianGroup(rank, base.invariant_factors), "square-cordial",
                            {"v": g.v, "E": g.E, "m": 3, "i": 1, "j": 2 * g.v - 3})


def vanishing_bound(g: SimpleGraph, m: int, i: int, j: int) -> bool:
    """True means H^{i,j}_{A_m}(G) is zero because j is too large."""
    if m < 3:
        raise OutOfRange("the bound needs m >= 3")
    if not 0 < i < girth(g):
        raise OutOfRange("the bound needs 0 < i < girth")
    return j >= (m - 1) * (g.v - i)


def edge_p3_prediction(g: SimpleGraph, e: int, h1_top: AbelianGroup) -> AbelianGroup:
    """Predicted top group of G|P_3 glued along edge e, from the top group of G."""
    return h1_top + AbelianGroup.from_factors(triangles_on_edge(g, g.edges[e]), [3])


def edge_p4_prediction(h1_top: AbelianGroup) -> AbelianGroup:
    return h1_top + Z
