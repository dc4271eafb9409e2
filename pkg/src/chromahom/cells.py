"""Relation presentations of the 2-complexes built from triangles and 4-cycles of a graph.

Generators are the edges of G, edge ``(u, w)`` with ``u < w`` oriented from u
to w.  Walking an edge backwards contributes ``-1``.  A triangle ``a < b < c``
is always walked ``a -> b -> c -> a``.  A 4-cycle ``(a, x, b, y)`` is walked
``a -> x -> b -> y -> a``.  Variants whose name starts with ``hat-`` keep the
vertices of G and carry a vertex boundary; all others identify every vertex
to one point, so H_1 is simply ``Z^E / rowspace``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import SimpleGraph, build_graph, four_cycles, has_diagonal, triangles
from .homology import AbelianGroup, IntMatrix, cokernel, homology_pair, matrix_rank

VARIANTS = ("Δ4", "Δ4'", "Δ", "34", "34'", "3", "(3)4", "hat-34", "hat-3", "hat-(3)4", "4-only")

# ascii spellings accepted on the command line
ALIASES = {"D4": "Δ4", "D4'": "Δ4'", "D": "Δ", "delta4": "Δ4", "delta4'": "Δ4'", "delta": "Δ"}


class UnknownCellVariant(ValueError):
    pass


def canonical_variant(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in VARIANTS:
        raise UnknownCellVariant(f"unknown cell variant {name!r}; expected one of {VARIANTS}")
    return name


@dataclass
class CellPresentation:
    variant: str
    generators: list[str]
    relations: IntMatrix  # one row per 2-cell, one column per generator
    boundary: IntMatrix | None = None  # vertices x generators, hat variants only
    row_labels: list[str] = field(default_factory=list)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def E(self) -> int:
        return self.ngens

    @property
    def nrows(self) -> int:
        return self.relations.nrows


def h1(p: CellPresentation) -> AbelianGroup:
    two = p.relations.T  # C_2 -> C_1
    if p.boundary is None:
        return cokernel(two)
    return homology_pair(p.boundary, two)


def h2(p: CellPresentation) -> int:
    """Rank of H_2, which is free (there are no 3-cells)."""
    return p.relations.nrows - matrix_rank(p.relations)


# ---------------------------------------------------------------------------
# oriented cycles

def _oriented(idx: dict[tuple[int, int], int], walk: list[int]) -> list[tuple[int, int]]:
    """(edge index, sign) for a closed walk through the given vertices."""
    out = []
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if a < b:
            out.append((idx[(a, b)], 1))
        else:
            out.append((idx[(b, a)], -1))
    return out


def triangle_edges(g: SimpleGraph, tri, idx=None) -> list[tuple[int, int]]:
    """Signed edges e1, e2, e3 of the coherently walked triangle."""
    return _oriented(idx or g.edge_index(), list(tri))


def square_edges(g: SimpleGraph, cyc, idx=None) -> list[tuple[int, int]]:
    return _oriented(idx or g.edge_index(), list(cyc))


def _row(ncols: int, terms) -> dict[int, int]:
    r: dict[int, int] = {}
    for e, s in terms:
        r[e] = r.get(e, 0) + s
    return {k: v for k, v in r.items() if v}


# ---------------------------------------------------------------------------
# triangle graph and coherent identification

class SignedUnionFind:
    """Union-find where each element carries a sign relative to its root."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.sign = [1] * n  # element = sign * parent
        self.bad = [False] * n  # root forced to equal its own negative

    def find(self, x: int) -> tuple[int, int]:
        s = 1
        path = []
        while self.parent[x] != x:
            path.append(x)
            s *= self.sign[x]
            x = self.parent[x]
        root = x
        # compress
        acc = s
        for y in path:
            ys = acc
            acc *= self.sign[y]
            self.parent[y] = root
            self.sign[y] = ys
        return root, s

    def union(self, a: int, b: int, rel: int) -> None:
        """Impose ``a = rel * b``."""
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        # a = sa*ra, b = sb*rb, so ra = sa*rel*sb*rb
        r = sa * rel * sb
        if ra == rb:
            if r != 1:
                self.bad[ra] = True
            return
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        self.sign[ra] = r
        self.bad[rb] = self.bad[rb] or self.bad[ra]


@dataclass
class TriangleGraph:
    triangles: list[tuple[int, int, int]]
    adjacency: list[list[int]]
    components: list[list[int]]  # triangle indices
    coherent: list[bool]

    @property
    def p0(self) -> int:
        return len(self.components)

    @property
    def p0_coherent(self) -> int:
        return sum(self.coherent)


def _identify(g: SimpleGraph, tris=None) -> SignedUnionFind:
    idx = g.edge_index()
    uf = SignedUnionFind(g.E)
    for tri in tris if tris is not None else triangles(g):
        (e1, s1), (e2, s2), (e3, s3) = triangle_edges(g, tri, idx)
        # s1 e1 = s2 e2 = s3 e3
        uf.union(e1, e2, s1 * s2)
        uf.union(e2, e3, s2 * s3)
    return uf


def triangle_graph(g: SimpleGraph) -> TriangleGraph:
    idx = g.edge_index()
    tris = triangles(g)
    on_edge: dict[int, list[int]] = {}
    for t, tri in enumerate(tris):
        for e, _ in triangle_edges(g, tri, idx):
            on_edge.setdefault(e, []).append(t)
    adj: list[list[int]] = [[] for _ in tris]
    for ts in on_edge.values():
        for a in ts:
            for b in ts:
                if a != b:
                    adj[a].append(b)
    uf = _identify(g, tris)
    groups: dict[int, list[int]] = {}
    for t, tri in enumerate(tris):
        root, _ = uf.find(triangle_edges(g, tri, idx)[0][0])
        groups.setdefault(root, []).append(t)
    comps = sorted(groups.values())
    coherent = []
    for comp in comps:
        root, _ = uf.find(triangle_edges(g, tris[comp[0]], idx)[0][0])
        coherent.append(not uf.bad[root])
    return TriangleGraph(tris, [sorted(a) for a in adj], comps, coherent)


def coherence(g: SimpleGraph) -> tuple[int, int]:
    tg = triangle_graph(g)
    return tg.p0, tg.p0_coherent


def square_cordial(g: SimpleGraph) -> bool:
    return all(has_diagonal(g, c) for c in four_cycles(g))


def edges_off_triangles(g: SimpleGraph) -> int:
    adj = g.adjacency()
    return sum(1 for a, b in g.edges if not adj[a] & adj[b])


# ---------------------------------------------------------------------------
# presentations

def _vertex_boundary(nverts: int, ends: list[tuple[int, int]]) -> IntMatrix:
    rows: list[dict[int, int]] = [{} for _ in range(nverts)]
    for k, (a, b) in enumerate(ends):
        if a != b:
            rows[b][k] = rows[b].get(k, 0) + 1
            rows[a][k] = rows[a].get(k, 0) - 1
    return IntMatrix(nverts, len(ends), rows)


def presentation(g: SimpleGraph, variant: str = "Δ4") -> CellPresentation:
    variant = canonical_variant(variant)
    if variant in ("(3)4", "hat-(3)4"):
        return _quotient_presentation(g, hat=variant.startswith("hat-"))
    idx = g.edge_index()
    rows: list[dict[int, int]] = []
    labels: list[str] = []
    if variant in ("Δ4", "Δ4'", "Δ"):
        for tri in triangles(g):
            (e1, s1), (e2, s2), (e3, s3) = triangle_edges(g, tri, idx)
            rows.append(_row(g.E, [(e1, s1), (e2, -2 * s2), (e3, s3)]))
            rows.append(_row(g.E, [(e1, s1), (e2, s2), (e3, -2 * s3)]))
            labels += [f"u1{tri}", f"u2{tri}"]
    elif variant in ("34", "34'", "3", "hat-34", "hat-3"):
        for tri in triangles(g):
            rows.append(_row(g.E, triangle_edges(g, tri, idx)))
            labels.append(f"t{tri}")
    if variant in ("Δ4", "34", "hat-34", "4-only", "Δ4'", "34'"):
        primed = variant.endswith("'")
        for cyc in four_cycles(g):
            if primed and has_diagonal(g, cyc):
                continue
            rows.append(_row(g.E, square_edges(g, cyc, idx)))
            labels.append(f"s{cyc}")
    boundary = _vertex_boundary(g.v, list(g.edges)) if variant.startswith("hat-") else None
    gens = [f"{a}-{b}" for a, b in g.edges]
    return CellPresentation(variant, gens, IntMatrix(len(rows), g.E, rows), boundary, labels)


def _quotient_presentation(g: SimpleGraph, hat: bool) -> CellPresentation:
    """Edges of each triangle identified coherently, then one 2-cell per 4-cycle.

    A class forced to equal its own negative gets the extra relation 2e = 0.
    """
    idx = g.edge_index()
    uf = _identify(g)
    roots: dict[int, int] = {}
    where: list[tuple[int, int]] = []
    for e in range(g.E):
        r, s = uf.find(e)
        if r not in roots:
            roots[r] = len(roots)
        where.append((roots[r], s))
    ncls = len(roots)
    rows: list[dict[int, int]] = []
    labels: list[str] = []
    for r, c in roots.items():
        if uf.bad[r]:
            rows.append({c: 2})
            labels.append(f"2e{c}")
    for cyc in four_cycles(g):
        rows.append(_row(ncls, [(where[e][0], s * where[e][1]) for e, s in square_edges(g, cyc, idx)]))
        labels.append(f"s{cyc}")
    gens = []
    for r in roots:
        members = [f"{g.edges[e][0]}-{g.edges[e][1]}" for e in range(g.E) if uf.find(e)[0] == r]
        gens.append("=".join(members))
    boundary = None
    if hat:
        # identifying e_ab with e_bc head-to-head and tail-to-tail glues all
        # three vertices of a triangle together
        parent = list(range(g.v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c in triangles(g):
            for x in (b, c):
                ra, rx = find(a), find(x)
                if ra != rx:
                    parent[max(ra, rx)] = min(ra, rx)
        vcls: dict[int, int] = {}
        for x in range(g.v):
            vcls.setdefault(find(x), len(vcls))
        ends = []
        for r in roots:
            e = next(e for e in range(g.E) if uf.find(e)[0] == r)
            a, b = g.edges[e]
            _, s = uf.find(e)
            ca, cb = vcls[find(a)], vcls[find(b)]
            ends.append((ca, cb) if s == 1 else (cb, ca))
        boundary = _vertex_boundary(len(vcls), ends)
    variant = "hat-(3)4" if hat else "(3)4"
    return CellPresentation(variant, gens, IntMatrix(len(rows), ncls, rows), boundary, labels)


# ---------------------------------------------------------------------------
# quad meshes

@dataclass
class QuadMesh:
    v: int
    edges: list[tuple[int, int]]  # directed u -> w
    faces: list[tuple[int, int, int, int]]  # signed 1-based edge indices

    def presentation(self) -> CellPresentation:
        """4-only presentation built from the faces, with the vertex boundary kept."""
        E = len(self.edges)
        rows = []
        for f in self.faces:
            rows.append(_row(E, [(abs(x) - 1, 1 if x > 0 else -1) for x in f]))
        gens = [f"{a}->{b}" for a, b in self.edges]
        labels = [f"f{k}" for k in range(len(self.faces))]
        return CellPresentation("4-only", gens, IntMatrix(len(rows), E, rows),
                                _vertex_boundary(self.v, self.edges), labels)

    def graph(self) -> SimpleGraph:
        return build_graph(self.v, self.edges)

    def check(self) -> None:
        """Each face must be a closed walk."""
        for f in self.faces:
            walk = []
            for x in f:
                a, b = self.edges[abs(x) - 1]
                walk.append((a, b) if x > 0 else (b, a))
            for (a, b), (c, d) in zip(walk, walk[1:] + walk[:1]):
                if b != c:
                    raise ValueError(f"face {f} is not a closed walk")


class MeshError(ValueError):
    pass


def parse_quad_mesh(text: str) -> QuadMesh:
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MeshError("empty mesh file")
    head = lines[0].split()
    if len(head) != 3:
        raise MeshError("first line must be 'v E F'")
    v, ne, nf = map(int, head)
    if len(lines) != 1 + ne + nf:
        raise MeshError(f"expected {ne} edge lines and {nf} face lines")
    edges = []
    for ln in lines[1:1 + ne]:
        a, b = map(int, ln.split())
        if not (0 <= a < v and 0 <= b < v):
            raise MeshError(f"edge endpoint out of range: {ln!r}")
        edges.append((a, b))
    faces = []
    for ln in lines[1 + ne:]:
        f = tuple(int(x) for x in ln.split())
        if len(f) != 4 or any(x == 0 or abs(x) > ne for x in f):
            raise MeshError(f"bad face line {ln!r}")
        faces.append(f)
    mesh = QuadMesh(v, edges, faces)
    try:
        mesh.check()
    except ValueError as exc:
        raise MeshError(str(exc)) from None
    return mesh


def format_quad_mesh(mesh: QuadMesh) -> str:
    out = [f"{mesh.v} {len(mesh.edges)} {len(mesh.faces)}"]
    out += [f"{a} {b}" for a, b in mesh.edges]
    out += [" ".join(str(x) for x in f) for f in mesh.faces]
    return "\n".join(out) + "\n"


def _grid_mesh(n: int, ident) -> QuadMesh:
    """n x n grid of unit squares with grid points glued by ``ident``."""
    parent: dict = {}

    def find(p):
        parent.setdefault(p, p)
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for p, q in ident:
        a, b = find(p), find(q)
        if a != b:
            parent[max(a, b)] = min(a, b)
    label: dict = {}
    for x in range(n + 1):
        for y in range(n + 1):
            label.setdefault(find((x, y)), len(label))

    def vid(p):
        return label[find(p)]

    edges: list[tuple[int, int]] = []
    eindex: dict[tuple[int, int], int] = {}
    faces = []
    for x in range(n):
        for y in range(n):
            corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
            face = []
            for p, q in zip(corners, corners[1:] + corners[:1]):
                a, b = vid(p), vid(q)
                if a == b:
                    raise MeshError("grid too small: an edge collapses to a loop")
                if (a, b) in eindex:
                    face.append(eindex[(a, b)] + 1)
                elif (b, a) in eindex:
                    face.append(-(eindex[(b, a)] + 1))
                else:
                    eindex[(a, b)] = len(edges)
                    edges.append((a, b))
                    face.append(len(edges))
            faces.append(tuple(face))
    return QuadMesh(len(label), edges, faces)


def torus_grid(n: int) -> QuadMesh:
    """n x n square grid on the torus (opposite sides glued straight)."""
    if n < 3:
        raise MeshError("torus grid needs n >= 3")
    ident = [((0, y), (n, y)) for y in range(n + 1)] + [((x, 0), (x, n)) for x in range(n + 1)]
    return _grid_mesh(n, ident)


def _boundary_walk(n: int) -> list[tuple[int, int]]:
    pts = [(x, 0) for x in range(n)] + [(n, y) for y in range(n)]
    pts += [(x, n) for x in range(n, 0, -1)] + [(0, y) for y in range(n, 0, -1)]
    return pts


def boundary_quotient_grid(n: int, k: int) -> QuadMesh:
    """n x n grid whose boundary circle is divided by the rotation of order k.

    k = 2 is the projective plane.  In general H_1 = Z_k.
    """
    walk = _boundary_walk(n)
    if k < 2 or len(walk) % k:
        raise MeshError("k must be >= 2 and divide the boundary length 4n")
    step = len(walk) // k
    ident = [(walk[p], walk[(p + step) % len(walk)]) for p in range(len(walk))]
    mesh = _grid_mesh(n, ident)
    g = mesh.graph()
    if g.E != len(mesh.edges):
        raise MeshError("grid too small: the quotient has parallel edges")
    return mesh
