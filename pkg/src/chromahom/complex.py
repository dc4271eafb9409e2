"""Enhanced-state bases and differentials of the chromatic cochain complex over A_m.

A basis element of C^{i,j} is a state ``s`` (a set of ``i`` edges) together
with an exponent in ``0..m-1`` for every component of the spanning subgraph
[G:s].  Components are ordered by their smallest vertex.  States are listed in
``itertools.combinations`` order over the canonical edge order, and for each
state the weight tuples are listed lexicographically.

Three differentials share this basis.  Adding an edge that joins two
components multiplies their weights in A_m.  Adding an edge inside one
component acts as the identity (``chromatic``), as zero (``hat``) or as
multiplication by x^(m-1) (``dichromatic``).  The last one does not preserve
the weight sum; it preserves ``(m-1)(i + k(s)) - sum(a)`` instead, and that is
what ``j`` means for the dichromatic variant.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .graphs import SimpleGraph
from .homology import AbelianGroup, IntMatrix, homology_pair, nontrivial_factors

VARIANTS = ("chromatic", "hat", "dichromatic")


class UnknownVariant(ValueError):
    pass


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise UnknownVariant(f"unknown variant {variant!r}; expected one of {VARIANTS}")


@dataclass(frozen=True, order=True)
class EnhancedState:
    state: tuple[int, ...]   # edge indices, increasing
    weights: tuple[int, ...]  # one exponent per component of [G:s]

    @property
    def degree(self) -> int:
        return len(self.state)

    @property
    def quantum(self) -> int:
        return sum(self.weights)


def component_labels(g: SimpleGraph, state: tuple[int, ...]) -> tuple[int, ...]:
    """Component index of every vertex in [G:s], components numbered by smallest vertex."""
    parent = list(range(g.v))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in state:
        a, b = g.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the smaller vertex as root so roots are component minima
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    index: dict[int, int] = {}
    out = []
    for x in range(g.v):
        r = find(x)
        if r not in index:
            index[r] = len(index)
        out.append(index[r])
    return tuple(out)


@lru_cache(maxsize=4096)
def weight_tuples(k: int, m: int, total: int) -> tuple[tuple[int, ...], ...]:
    """All k-tuples over 0..m-1 with the given sum, lexicographically."""
    if total < 0 or total > k * (m - 1):
        return ()
    if k == 0:
        return ((),) if total == 0 else ()
    out = []
    for a in range(min(m - 1, total) + 1):
        for rest in weight_tuples(k - 1, m, total - a):
            out.append((a,) + rest)
    return tuple(out)


def weight_total(variant: str, m: int, i: int, k: int, j: int) -> int:
    """Weight sum a state of degree i with k components needs to sit in grading j."""
    if variant == "dichromatic":
        return (m - 1) * (i + k) - j
    return j


@dataclass
class _Block:
    state: tuple[int, ...]
    labels: tuple[int, ...]
    ncomp: int
    offset: int
    weights: tuple[tuple[int, ...], ...]
    index: dict[tuple[int, ...], int] = field(default_factory=dict)


class _Level:
    """Basis of one C^{i,j}, grouped by state."""

    def __init__(self, g: SimpleGraph, m: int, i: int, j: int, variant: str, *, materialise: bool = True):
        self.blocks: list[_Block] = []
        self.by_state: dict[tuple[int, ...], _Block] = {}
        size = 0
        if 0 <= i <= g.E:
            for state in combinations(range(g.E), i):
                labels = component_labels(g, state)
                k = max(labels) + 1 if labels else 0
                ws = weight_tuples(k, m, weight_total(variant, m, i, k, j))
                if not ws:
                    continue
                blk = _Block(state, labels, k, size, ws)
                if materialise:
                    blk.index = {w: n for n, w in enumerate(ws)}
                self.blocks.append(blk)
                self.by_state[state] = blk
                size += len(ws)
        self.size = size

    def states(self) -> Iterator[EnhancedState]:
        for blk in self.blocks:
            for w in blk.weights:
                yield EnhancedState(blk.state, w)


def basis_size(g: SimpleGraph, m: int, i: int, j: int, variant: str = "chromatic") -> int:
    _check_variant(variant)
    return _Level(g, m, i, j, variant, materialise=False).size


def enumerate_basis(g: SimpleGraph, m: int, i: int, j: int, variant: str = "chromatic") -> list[EnhancedState]:
    _check_variant(variant)
    if m < 2:
        raise ValueError("m must be at least 2")
    return list(_Level(g, m, i, j, variant, materialise=False).states())


def _build(g: SimpleGraph, m: int, src: _Level, dst: _Level, variant: str) -> IntMatrix:
    rows: list[dict[int, int]] = [{} for _ in range(dst.size)]
    top = m - 1
    for blk in src.blocks:
        inside = set(blk.state)
        labels = blk.labels
        for e in range(g.E):
            if e in inside:
                continue
            sign = -1 if sum(1 for f in blk.state if f < e) % 2 else 1
            new_state = tuple(sorted(blk.state + (e,)))
            tgt = dst.by_state.get(new_state)
            if tgt is None:
                continue
            a, b = g.edges[e]
            cu, cw = labels[a], labels[b]
            if cu != cw:
                if cu > cw:
                    cu, cw = cw, cu
                for n, w in enumerate(blk.weights):
                    s = w[cu] + w[cw]
                    if s > top:
                        continue
                    nw = w[:cu] + (s,) + w[cu + 1:cw] + w[cw + 1:]
                    rows[tgt.offset + tgt.index[nw]][blk.offset + n] = sign
            elif variant == "chromatic":
                for n, w in enumerate(blk.weights):
                    rows[tgt.offset + tgt.index[w]][blk.offset + n] = sign
            elif variant == "dichromatic":
                for n, w in enumerate(blk.weights):
                    if w[cu] == 0:
                        nw = w[:cu] + (top,) + w[cu + 1:]
                        rows[tgt.offset + tgt.index[nw]][blk.offset + n] = sign
            # hat: the same-component map is zero
    return IntMatrix(dst.size, src.size, rows)


def differential(g: SimpleGraph, m: int, j: int, i: int, variant: str = "chromatic") -> IntMatrix:
    """D^i : C^{i,j} -> C^{i+1,j}, shape ``(|C^{i+1,j}|, |C^{i,j}|)``."""
    _check_variant(variant)
    src = _Level(g, m, i, j, variant)
    dst = _Level(g, m, i + 1, j, variant)
    return _build(g, m, src, dst, variant)


@dataclass
class GradedSliceComplex:
    """Degrees ``i_lo..i_hi`` of the complex at fixed ``(m, j)``.

    ``differentials[i]`` is D^i for ``i_lo-1 <= i <= i_hi``, so the slice holds
    everything needed for H^i at every degree in range.
    """

    graph: SimpleGraph
    m: int
    j: int
    variant: str
    i_range: tuple[int, int]
    bases: dict[int, list[EnhancedState]]
    differentials: dict[int, IntMatrix]

    def rank(self, i: int) -> int:
        return len(self.bases[i])

    def cohomology(self, i: int) -> AbelianGroup:
        return homology_pair(self.differentials[i], self.differentials[i - 1])

    def homology(self, i: int) -> AbelianGroup:
        # chain convention: boundary maps are the transposes
        return homology_pair(self.differentials[i - 1].T, self.differentials[i].T)


def slice_complex(g: SimpleGraph, m: int, j: int, i_center: int, variant: str = "chromatic",
                  radius: int = 1) -> GradedSliceComplex:
    _check_variant(variant)
    lo, hi = i_center - radius, i_center + radius
    levels = {i: _Level(g, m, i, j, variant) for i in range(lo - 1, hi + 2)}
    diffs = {i: _build(g, m, levels[i], levels[i + 1], variant) for i in range(lo - 1, hi + 1)}
    bases = {i: list(levels[i].states()) for i in range(lo, hi + 1)}
    return GradedSliceComplex(g, m, j, variant, (lo, hi), bases, diffs)


def cohomology(g: SimpleGraph, m: int, i: int, j: int, variant: str = "chromatic") -> AbelianGroup:
    """H^{i,j} of the chosen variant."""
    _check_variant(variant)
    lv = {d: _Level(g, m, d, j, variant) for d in (i - 1, i, i + 1)}
    d_in = _build(g, m, lv[i - 1], lv[i], variant)
    d_out = _build(g, m, lv[i], lv[i + 1], variant)
    return homology_pair(d_out, d_in, check=False)


def homology(g: SimpleGraph, m: int, i: int, j: int, variant: str = "chromatic") -> AbelianGroup:
    """H_{i,j}: homology of the transposed (chain) complex."""
    _check_variant(variant)
    lv = {d: _Level(g, m, d, j, variant) for d in (i - 1, i, i + 1)}
    d_in = _build(g, m, lv[i], lv[i + 1], variant).T
    d_out = _build(g, m, lv[i - 1], lv[i], variant).T
    return homology_pair(d_out, d_in, check=False)


def torsion_h1(g: SimpleGraph, m: int, j: int, variant: str = "chromatic") -> AbelianGroup:
    """Torsion of H^{1,j}.

    ker D^1 is a saturated sublattice of C^1, so the torsion of ker D^1 / im D^0
    equals the torsion of C^1 / im D^0 and only D^0 has to be reduced.
    """
    _check_variant(variant)
    d0 = _build(g, m, _Level(g, m, 0, j, variant), _Level(g, m, 1, j, variant), variant)
    _, factors = nontrivial_factors(d0)
    return AbelianGroup.from_factors(0, factors)


def nonempty_gradings(g: SimpleGraph, m: int, i: int, variant: str = "chromatic") -> list[int]:
    """Gradings j with C^{i,j} nonzero."""
    _check_variant(variant)
    if not 0 <= i <= g.E:
        return []
    ks = set()
    for state in combinations(range(g.E), i):
        labels = component_labels(g, state)
        ks.add(max(labels) + 1 if labels else 0)
    js = set()
    for k in ks:
        for s in range(k * (m - 1) + 1):
            js.add((m - 1) * (i + k) - s if variant == "dichromatic" else s)
    return sorted(js)
