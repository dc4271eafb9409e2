"""Exact integer linear algebra: Smith normal form, homology, abelian groups.

All entries are Python ints, so nothing overflows.  Large sparse matrices are
diagonalised by elimination on unit pivots (Markowitz order) followed by
gcd-style reduction of whatever is left; small matrices, or callers that need
the unimodular transforms, go through a dense routine.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

DENSE_LIMIT = 64


class IntMatrix:
    """Sparse integer matrix stored as one ``{col: value}`` dict per row.

    Shape is ``(nrows, ncols)``; a matrix acts on column vectors, so a map
    ``Z^a -> Z^b`` has shape ``(b, a)``.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: list[dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError("row count does not match nrows")
        self.rows = rows

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        nrows = len(dense)
        if ncols is None:
            ncols = len(dense[0]) if nrows else 0
        rows = []
        for r in dense:
            if len(r) != ncols:
                raise ValueError("ragged dense matrix")
            rows.append({j: int(x) for j, x in enumerate(r) if x})
        return cls(nrows, ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i].get(j, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                out[i][j] = x
        return out

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, [dict(r) for r in self.rows])

    def transpose(self) -> "IntMatrix":
        rows: list[dict[int, int]] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                rows[j][i] = x
        return IntMatrix(self.ncols, self.nrows, rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        rows = []
        orows = other.rows
        for r in self.rows:
            acc: dict[int, int] = {}
            for k, x in r.items():
                for j, y in orows[k].items():
                    acc[j] = acc.get(j, 0) + x * y
            rows.append({j: v for j, v in acc.items() if v})
        return IntMatrix(self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.rows, other.rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def as_matrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_dense(m)


# ---------------------------------------------------------------------------
# invariant-factor normalisation

def normalize_factors(values: Iterable[int]) -> list[int]:
    """Turn a multiset of nonzero diagonal entries into a divisibility chain.

    The result has the same length (units are kept) and the same product up to
    sign; it is what a Smith normal form would show on its diagonal.
    """
    a = sorted(abs(int(x)) for x in values)
    if any(x == 0 for x in a):
        raise ValueError("zero entry passed to normalize_factors")
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = a[i], a[j]
            if y % x:
                g = gcd(x, y)
                a[i], a[j] = g, x // g * y
    return a


# ---------------------------------------------------------------------------
# sparse diagonalisation

def _diagonalize_sparse(m: IntMatrix) -> list[int]:
    """Return the nonzero entries of some diagonal form of ``m`` (abs values)."""
    rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(m.rows) if r}
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    diag: list[int] = []

    def drop_pivot(pr: int, pc: int) -> None:
        prow = rows.pop(pr)
        for j in prow:
            if j != pc:
                s = cols[j]
                s.discard(pr)
                if not s:
                    del cols[j]
        del cols[pc]

    def axpy(r: int, f: int, prow: dict[int, int], touched: set[int]) -> None:
        # rows[r] -= f * prow
        row = rows[r]
        for j, x in prow.items():
            new = row.get(j, 0) - f * x
            if new:
                if j not in row:
                    cols[j].add(r)
                row[j] = new
            elif j in row:
                del row[j]
                cols[j].discard(r)
            touched.add(j)
        if not row:
            del rows[r]

    while rows:
        # phase 1: unit pivots, sparsest column first, then sparsest row
        heap = [(len(s), j) for j, s in cols.items()]
        heapq.heapify(heap)
        while heap:
            n, c = heapq.heappop(heap)
            s = cols.get(c)
            if s is None:
                continue
            if len(s) != n:
                heapq.heappush(heap, (len(s), c))
                continue
            best = -1
            blen = 0
            for r in s:
                if rows[r][c] in (1, -1):
                    ln = len(rows[r])
                    if best < 0 or ln < blen:
                        best, blen = r, ln
                        if ln == 1:
                            break
            if best < 0:
                continue
            prow = rows[best]
            p = prow[c]
            touched: set[int] = set()
            for r in list(s):
                if r != best:
                    axpy(r, rows[r][c] * p, prow, touched)
            diag.append(1)
            drop_pivot(best, c)
            for j in touched:
                sj = cols.get(j)
                if sj:
                    heapq.heappush(heap, (len(sj), j))
        if not rows:
            break
        # phase 2: isolate one pivot of smallest absolute value by gcd steps
        pr, pc, pv = -1, -1, 0
        for r, row in rows.items():
            for j, x in row.items():
                ax = abs(x)
                if pr < 0 or ax < pv:
                    pr, pc, pv = r, j, ax
        while True:
            p = rows[pr][pc]
            touched = set()
            for r in list(cols[pc]):
                if r != pr:
                    axpy(r, rows[r][pc] // p, rows[pr], touched)
            s = cols[pc]
            if len(s) > 1:
                r = min((r for r in s if r != pr), key=lambda r: abs(rows[r][pc]))
                pr = r
                continue
            prow = rows[pr]
            # column operations: only row pr is affected since column pc is isolated
            for j in list(prow):
                if j != pc:
                    new = prow[j] - (prow[j] // p) * p
                    if new:
                        prow[j] = new
                    else:
                        del prow[j]
                        cols[j].discard(pr)
                        if not cols[j]:
                            del cols[j]
            if len(prow) > 1:
                pc = min((j for j in prow if j != pc), key=lambda j: abs(prow[j]))
                continue
            diag.append(abs(p))
            drop_pivot(pr, pc)
            break
    return diag


# ---------------------------------------------------------------------------
# dense Smith normal form with transforms

def _dense_snf(a: list[list[int]], nrows: int, ncols: int, with_transforms: bool):
    d = [list(r) for r in a]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if with_transforms else None
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)] if with_transforms else None

    def swap_rows(i, k):
        d[i], d[k] = d[k], d[i]
        if u is not None:
            u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in d:
            r[j], r[k] = r[k], r[j]
        if v is not None:
            for r in v:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, f):  # row dst += f * row src
        rd, rs = d[dst], d[src]
        for j in range(ncols):
            if rs[j]:
                rd[j] += f * rs[j]
        if u is not None:
            ud, us = u[dst], u[src]
            for j in range(nrows):
                if us[j]:
                    ud[j] += f * us[j]

    def add_col(dst, src, f):  # col dst += f * col src
        for r in d:
            if r[src]:
                r[dst] += f * r[src]
        if v is not None:
            for r in v:
                if r[src]:
                    r[dst] += f * r[src]

    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = d[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            p = d[t][t]
            for i in range(t + 1, nrows):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
                    if d[i][t]:
                        changed = True
            for j in range(t + 1, ncols):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
                    if d[t][j]:
                        changed = True
            if changed:
                best = None
                for i in range(t + 1, nrows):
                    if d[i][t] and (best is None or abs(d[i][t]) < best[0]):
                        best = (abs(d[i][t]), i, None)
                for j in range(t + 1, ncols):
                    if d[t][j] and (best is None or abs(d[t][j]) < best[0]):
                        best = (abs(d[t][j]), None, j)
                _, i, j = best
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if d[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


@dataclass
class SNFResult:
    """Smith normal form ``D = U @ M @ V`` (transforms only when requested)."""

    shape: tuple[int, int]
    diagonal: list[int]
    U: IntMatrix | None = None
    V: IntMatrix | None = None

    @property
    def D(self) -> IntMatrix:
        m, n = self.shape
        rows: list[dict[int, int]] = [{} for _ in range(m)]
        for i, x in enumerate(self.diagonal):
            if x:
                rows[i][i] = x
        return IntMatrix(m, n, rows)

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)

    @property
    def torsion(self) -> list[int]:
        return [x for x in self.diagonal if x > 1]


def smith_normal_form(m, with_transforms: bool = False) -> SNFResult:
    """Smith normal form of an integer matrix (dense lists or ``IntMatrix``)."""
    m = as_matrix(m)
    nrows, ncols = m.shape
    k = min(nrows, ncols)
    if with_transforms or max(nrows, ncols) < DENSE_LIMIT:
        d, u, v = _dense_snf(m.to_dense(), nrows, ncols, with_transforms)
        diag = [d[i][i] for i in range(k)]
        # the dense loop keeps a divisibility chain; zeros trail
        nz = [x for x in diag if x]
        if nz != normalize_factors(nz) or any(diag[i] == 0 and diag[i + 1] for i in range(k - 1)):
            raise AssertionError("dense SNF lost its canonical shape")
        res = SNFResult((nrows, ncols), diag)
        if with_transforms:
            res.U = IntMatrix.from_dense(u, nrows)
            res.V = IntMatrix.from_dense(v, ncols)
        return res
    nz = normalize_factors(_diagonalize_sparse(m))
    return SNFResult((nrows, ncols), nz + [0] * (k - len(nz)))


def matrix_rank(m) -> int:
    m = as_matrix(m)
    if m.is_zero():
        return 0
    return len(_diagonalize_sparse(m))


def nontrivial_factors(m) -> tuple[int, list[int]]:
    """Rank and the invariant factors greater than one of ``m``."""
    m = as_matrix(m)
    if m.is_zero():
        return 0, []
    diag = _diagonalize_sparse(m)
    return len(diag), [x for x in normalize_factors(diag) if x > 1]


# ---------------------------------------------------------------------------
# abelian groups

def _is_prime(p: int) -> bool:
    from sympy import isprime

    return isprime(p)


def _p_valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z_{d1} + ... + Z_{dt} with d1 | d2 | ... | dt and every di >= 2."""

    rank: int = 0
    invariant_factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        f = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", f)
        if self.rank < 0:
            raise ValueError("negative rank")
        if any(x < 2 for x in f):
            raise ValueError(f"invariant factors must be >= 2, got {f}")
        if any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not a divisibility chain: {f}")

    @classmethod
    def from_factors(cls, rank: int = 0, factors: Iterable[int] = ()) -> "AbelianGroup":
        """Build from any list of cyclic orders (0 counts as a free summand)."""
        fs = []
        for x in factors:
            x = abs(int(x))
            if x == 0:
                rank += 1
            elif x > 1:
                fs.append(x)
        return cls(rank, tuple(x for x in normalize_factors(fs) if x > 1))

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank, ())

    @classmethod
    def zero(cls) -> "AbelianGroup":
        return cls(0, ())

    @property
    def torsion(self) -> "AbelianGroup":
        return AbelianGroup(0, self.invariant_factors)

    @property
    def torsion_order(self) -> int:
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    def is_free(self) -> bool:
        return not self.invariant_factors

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_factors(self.rank + other.rank, self.invariant_factors + other.invariant_factors)

    def primary(self) -> dict[int, list[int]]:
        """Primary decomposition ``{p: [p^e, ...]}`` of the torsion part."""
        from sympy import factorint

        out: dict[int, list[int]] = {}
        for d in self.invariant_factors:
            for p, e in factorint(d).items():
                out.setdefault(p, []).append(p**e)
        return {p: sorted(v) for p, v in sorted(out.items())}

    @classmethod
    def from_primary(cls, rank: int, primary: dict[int, list[int]]) -> "AbelianGroup":
        return cls.from_factors(rank, [q for qs in primary.values() for q in qs])

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "invariant_factors": list(self.invariant_factors),
            "primary": {str(p): qs for p, qs in self.primary().items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "AbelianGroup":
        return cls(int(data["rank"]), tuple(int(x) for x in data.get("invariant_factors", ())))

    def _render(self, parts: list[int]) -> str:
        terms = []
        counts: dict[int, int] = {}
        for d in parts:
            counts[d] = counts.get(d, 0) + 1
        for d in sorted(counts):
            terms.append(f"Z_{d}" + (f"^{counts[d]}" if counts[d] > 1 else ""))
        if self.rank:
            terms.append("Z" + (f"^{self.rank}" if self.rank > 1 else ""))
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self._render(list(self.invariant_factors))

    def primary_str(self) -> str:
        return self._render([q for qs in self.primary().values() for q in qs])


def parse_group(text: str) -> AbelianGroup:
    """Parse strings like ``"Z_3^2 + Z_6 + Z^2"`` or ``"0"``."""
    text = text.replace("⊕", "+").replace(" ", "")
    if text in ("", "0"):
        return AbelianGroup.zero()
    rank = 0
    factors: list[int] = []
    for term in text.split("+"):
        base, _, exp = term.partition("^")
        e = int(exp) if exp else 1
        if base == "Z":
            rank += e
        elif base.startswith("Z_"):
            factors += [int(base[2:])] * e
        else:
            raise ValueError(f"cannot parse group term {term!r}")
    return AbelianGroup.from_factors(rank, factors)


def equal(a: AbelianGroup, b: AbelianGroup) -> bool:
    return a.rank == b.rank and a.invariant_factors == b.invariant_factors


def tensor_zp(a: AbelianGroup, p: int) -> int:
    """Dimension of ``A (x) Z_p`` over Z_p."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return a.rank + sum(1 for d in a.invariant_factors if d % p == 0)


def localize_away(a: AbelianGroup, p: int) -> AbelianGroup:
    """``A (x) Z[1/p]`` as a group: strip the p-primary part of the torsion."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return AbelianGroup.from_factors(a.rank, [d // p ** _p_valuation(d, p) for d in a.invariant_factors])


def multiply_by(a: AbelianGroup, n: int) -> AbelianGroup:
    """The subgroup ``nA``."""
    if n == 0:
        return AbelianGroup.zero()
    return AbelianGroup.from_factors(a.rank, [d // gcd(d, n) for d in a.invariant_factors])


def p_primary(a: AbelianGroup, p: int) -> list[int]:
    """Orders of the p-primary cyclic summands, ascending."""
    out = []
    for d in a.invariant_factors:
        k = _p_valuation(d, p)
        if k:
            out.append(p**k)
    return out


# ---------------------------------------------------------------------------
# homology

class NotAComplex(ValueError):
    pass


def homology_pair(d_out, d_in, check: bool = True) -> AbelianGroup:
    """``ker(d_out) / im(d_in)`` for ``C_{n+1} --d_in--> C_n --d_out--> C_{n-1}``.

    ``d_out`` has shape ``(dim C_{n-1}, dim C_n)`` and ``d_in`` has shape
    ``(dim C_n, dim C_{n+1})``.
    """
    d_out = as_matrix(d_out)
    d_in = as_matrix(d_in)
    n = d_out.ncols
    if d_in.nrows != n:
        raise ValueError(f"incompatible shapes {d_out.shape} and {d_in.shape}")
    if check and not (d_out @ d_in).is_zero():
        raise NotAComplex("d_out @ d_in is not zero")
    r_out = matrix_rank(d_out)
    r_in, tors = nontrivial_factors(d_in)
    return AbelianGroup.from_factors(n - r_out - r_in, tors)


def cokernel(m) -> AbelianGroup:
    """``Z^nrows / im(m)``."""
    m = as_matrix(m)
    r, tors = nontrivial_factors(m)
    return AbelianGroup.from_factors(m.nrows - r, tors)


def cohomology_from_homology(h_n: AbelianGroup, h_nminus1: AbelianGroup) -> AbelianGroup:
    """Universal coefficients: ``H^n = H_n / tor + tor(H_{n-1})``."""
    return AbelianGroup(h_n.rank, h_nminus1.invariant_factors)
