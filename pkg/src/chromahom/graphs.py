"""Simple graphs, the counting statistics used by the closed forms, families and products."""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless graph without parallel edges on vertices ``0..v-1``.

    ``edges`` is sorted lexicographically on ``(min, max)``; that order is the
    global edge order every sign convention downstream relies on.
    """

    v: int
    edges: tuple[tuple[int, int], ...]
    had_duplicates: bool = field(default=False, compare=False)
    name: str | None = field(default=None, compare=False)

    @property
    def E(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.v)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edge_index()

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        return build_graph(self.v, [(perm[a], perm[b]) for a, b in self.edges])

    def delete_edges(self, drop: Iterable[tuple[int, int]]) -> "SimpleGraph":
        drop = {(min(a, b), max(a, b)) for a, b in drop}
        return build_graph(self.v, [e for e in self.edges if e not in drop])

    def __str__(self) -> str:
        return self.name or f"G(v={self.v}, E={self.E})"


def build_graph(v: int, edges: Iterable[Sequence[int]], name: str | None = None) -> SimpleGraph:
    """Validate, deduplicate and canonically order an edge list."""
    if v < 0:
        raise GraphError("negative vertex count")
    seen = set()
    dup = False
    for e in edges:
        a, b = int(e[0]), int(e[1])
        if not (0 <= a < v and 0 <= b < v):
            raise GraphError(f"endpoint out of range in edge {(a, b)} for v={v}")
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            dup = True
        seen.add(key)
    return SimpleGraph(v, tuple(sorted(seen)), dup, name)


# ---------------------------------------------------------------------------
# statistics

@dataclass(frozen=True)
class GraphStats:
    v: int
    E: int
    t0: int
    t1: int
    t2: int
    t3: int
    d1: int
    d2: int
    dge3: int
    sq: int
    sqprime: int
    girth: float
    p0: int
    p0bi: int
    p1: int


def distances(g: SimpleGraph) -> list[list[float]]:
    adj = g.adjacency()
    out = []
    for s in range(g.v):
        dist = [INF] * g.v
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if dist[y] == INF:
                    dist[y] = dist[x] + 1
                    q.append(y)
        out.append(dist)
    return out


def components(g: SimpleGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.v
    comps = []
    for s in range(g.v):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    q.append(y)
        comps.append(sorted(comp))
    return comps


def is_bipartite_component(g: SimpleGraph, comp: list[int], adj=None) -> bool:
    adj = adj or g.adjacency()
    colour = {comp[0]: 0}
    q = deque([comp[0]])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in colour:
                colour[y] = 1 - colour[x]
                q.append(y)
            elif colour[y] == colour[x]:
                return False
    return True


def girth(g: SimpleGraph) -> float:
    adj = g.adjacency()
    best = INF
    for s in range(g.v):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def triangles(g: SimpleGraph) -> list[tuple[int, int, int]]:
    """Vertex triples ``a < b < c`` spanning a 3-cycle, in lexicographic order."""
    adj = g.adjacency()
    out = []
    for a, b in g.edges:
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                out.append((a, b, c))
    return sorted(out)


def four_cycles(g: SimpleGraph) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle once, as ``(a, x, b, y)`` with ``a`` its smallest vertex and ``x < y``.

    The cycle is ``a - x - b - y - a``; ``a``/``b`` and ``x``/``y`` are the two
    diagonal pairs.
    """
    adj = g.adjacency()
    out = []
    for a in range(g.v):
        for b in range(a + 1, g.v):
            common = sorted(c for c in adj[a] & adj[b] if c > a)
            for x, y in combinations(common, 2):
                out.append((a, x, b, y))
    return out


def has_diagonal(g: SimpleGraph, cyc: tuple[int, int, int, int]) -> bool:
    a, x, b, y = cyc
    idx = g.edge_index()
    return (min(a, b), max(a, b)) in idx or (x, y) in idx


def triangles_on_edge(g: SimpleGraph, e: tuple[int, int]) -> int:
    adj = g.adjacency()
    a, b = e
    return len(adj[a] & adj[b])


def stats(g: SimpleGraph) -> GraphStats:
    adj = g.adjacency()
    t = [0, 0, 0, 0]
    for a, b, c in combinations(range(g.v), 3):
        t[(b in adj[a]) + (c in adj[a]) + (c in adj[b])] += 1
    dist = distances(g)
    d1 = d2 = dge3 = 0
    for a in range(g.v):
        for b in range(g.v):
            if a == b:
                continue
            d = dist[a][b]
            if d == 1:
                d1 += 1
            elif d == 2:
                d2 += 1
            else:
                dge3 += 1
    cycles = four_cycles(g)
    sqprime = sum(1 for c in cycles if has_diagonal(g, c))
    comps = components(g)
    p0 = len(comps)
    p0bi = sum(1 for c in comps if is_bipartite_component(g, c, adj))
    return GraphStats(
        v=g.v, E=g.E, t0=t[0], t1=t[1], t2=t[2], t3=t[3],
        d1=d1, d2=d2, dge3=dge3, sq=len(cycles), sqprime=sqprime,
        girth=girth(g), p0=p0, p0bi=p0bi, p1=g.E - g.v + p0,
    )


# ---------------------------------------------------------------------------
# families

def polygon(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("polygon needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], f"P{n}")


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], f"L{n}")


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2), f"K{n}")


def edgeless(n: int) -> SimpleGraph:
    return build_graph(n, [], f"E{n}")


def wheel(n: int) -> SimpleGraph:
    """Cone over an (n-1)-gon: hub 0, rim 1..n-1 in cyclic order."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    rim = list(range(1, n))
    edges = [(0, r) for r in rim] + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return build_graph(n, edges, f"W{n}")


def wheel_out(n: int) -> SimpleGraph:
    """W_n without the rim edge {1, 2}."""
    g = wheel(n).delete_edges([(1, 2)])
    return SimpleGraph(g.v, g.edges, name=f"Wout{n}")


def wheel_in(n: int) -> SimpleGraph:
    """W_n without the spike {0, 1}."""
    g = wheel(n).delete_edges([(0, 1)])
    return SimpleGraph(g.v, g.edges, name=f"Win{n}")


def triangle_polygon(k: int) -> SimpleGraph:
    """P_3|P_k: the k-gon on 0..k-1 with apex k joined to 0 and 1 (v = k+1)."""
    if k < 3:
        raise GraphError("Pt needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(0, k), (1, k)]
    return build_graph(k + 1, edges, f"Pt:{k}")


def triangle_squares(k: int) -> SimpleGraph:
    """Triangle followed by a straight chain of k squares (v = 3+2k).

    Apex 0; rungs (1,2), (3,4), ..., (2k+1, 2k+2); rails 1-3-5-... and 2-4-6-...
    """
    if k < 0:
        raise GraphError("Gts needs k >= 0")
    edges = [(0, 1), (0, 2), (1, 2)]
    for i in range(1, k + 1):
        a0, b0, a1, b1 = 2 * i - 1, 2 * i, 2 * i + 1, 2 * i + 2
        edges += [(a0, a1), (b0, b1), (a1, b1)]
    return build_graph(3 + 2 * k, edges, f"Gts:{k}")


def gk_graph(k: int) -> SimpleGraph:
    """Reconstruction of the G_k family (v = 4(k+1)).

    A triangulated band between an outer and an inner cycle of length
    n = 2(k+1): inner u_i = i, outer o_i = n+i, edges u_i u_{i+1}, o_i o_{i+1},
    u_i o_i, u_i o_{i+1}.  The inner cycle is then cut into a ladder of k
    squares by k-1 rungs u_i -- u_{n-1-i}, i = 1..k-1.  Checked against all
    seven published groups (k = 1..7).
    """
    if k < 1:
        raise GraphError("Gk needs k >= 1")
    n = 2 * (k + 1)
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (n + i, n + j), (i, n + i), (i, n + j)]
    edges += [(i, n - 1 - i) for i in range(1, k)]
    return build_graph(2 * n, edges, f"Gk:{k}")


_FAMILIES = {
    "P": polygon,
    "K": complete,
    "W": wheel,
    "Wout": wheel_out,
    "Win": wheel_in,
    "Pt:": triangle_polygon,
    "Gts:": triangle_squares,
    "Gk:": gk_graph,
    "L": path,
    "E": edgeless,
}

FAMILY_HELP = {
    "P<n>": "polygon (n-cycle), n >= 3",
    "K<n>": "complete graph",
    "W<n>": "wheel: cone over an (n-1)-gon, n vertices",
    "Wout<n>": "wheel minus a rim edge",
    "Win<n>": "wheel minus a spike",
    "Pt:<k>": "triangle glued to a k-gon along an edge (v = k+1)",
    "Gts:<k>": "triangle followed by a chain of k squares (v = 3+2k)",
    "Gk:<k>": "G_k family, v = 4(k+1)",
    "L<n>": "path on n vertices",
    "E<n>": "n isolated vertices",
}


def family(desc: str) -> SimpleGraph:
    """Build a graph from a family descriptor such as ``"W8"`` or ``"Pt:6"``."""
    m = re.fullmatch(r"(Wout|Win|Pt:|Gts:|Gk:|P|K|W|L|E)(\d+)", desc.strip())
    if not m:
        raise GraphError(f"unknown family descriptor {desc!r}")
    g = _FAMILIES[m.group(1)](int(m.group(2)))
    return SimpleGraph(g.v, g.edges, name=desc.strip())


# ---------------------------------------------------------------------------
# products

def _glue(g: SimpleGraph, h: SimpleGraph, pairs: dict[int, int]) -> SimpleGraph:
    """Disjoint union with H-vertex ``w`` identified to G-vertex ``pairs[w]``.

    G keeps its labels; the remaining H vertices follow in increasing order.
    """
    label = {}
    nxt = g.v
    for w in range(h.v):
        if w in pairs:
            label[w] = pairs[w]
        else:
            label[w] = nxt
            nxt += 1
    edges = list(g.edges) + [(label[a], label[b]) for a, b in h.edges]
    return build_graph(nxt, edges)


def _check_vertex(g: SimpleGraph, x: int) -> None:
    if not 0 <= x < g.v:
        raise GraphError(f"vertex {x} not in graph with v={g.v}")


def one_vertex_product(g: SimpleGraph, vg: int, h: SimpleGraph, wh: int) -> SimpleGraph:
    _check_vertex(g, vg)
    _check_vertex(h, wh)
    return _glue(g, h, {wh: vg})


def two_vertex_product(g: SimpleGraph, v1: int, v2: int, h: SimpleGraph, w1: int, w2: int,
                       flip: bool = False) -> SimpleGraph:
    """Identify v1 with w1 and v2 with w2 (or v1 with w2, v2 with w1 when ``flip``)."""
    for x in (v1, v2):
        _check_vertex(g, x)
    for x in (w1, w2):
        _check_vertex(h, x)
    if v1 == v2 or w1 == w2:
        raise GraphError("two-vertex product needs distinct attachment vertices")
    if flip:
        w1, w2 = w2, w1
    return _glue(g, h, {w1: v1, w2: v2})


def edge_product(g: SimpleGraph, eg: int, h: SimpleGraph, eh: int, flip: bool = False) -> SimpleGraph:
    """G|H: identify edge number ``eg`` of G with edge number ``eh`` of H."""
    if not (0 <= eg < g.E and 0 <= eh < h.E):
        raise GraphError("edge index out of range")
    (a, b), (c, d) = g.edges[eg], h.edges[eh]
    return two_vertex_product(g, a, b, h, c, d, flip)


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    return _glue(g, h, {})


# ---------------------------------------------------------------------------
# isomorphism helpers (brute force, small graphs only)

def canonical_form(g: SimpleGraph) -> tuple:
    """Lexicographically least edge list over all vertex permutations (v <= 10)."""
    from itertools import permutations

    if g.v > 10:
        raise GraphError("canonical_form is brute force; v <= 10 only")
    best = None
    for perm in permutations(range(g.v)):
        es = tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges))
        if best is None or es < best:
            best = es
    return (g.v, best)


def isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if (g.v, g.E) != (h.v, h.E):
        return False
    if sorted(len(a) for a in g.adjacency()) != sorted(len(a) for a in h.adjacency()):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# edge-list text format: "v E" then E lines "u w"

def parse_edge_list(text: str) -> SimpleGraph:
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("first line must be 'v E'")
    v, ne = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != ne:
        raise GraphError(f"header promises {ne} edges, found {len(body)}")
    if v == 0 and ne:
        raise GraphError("edges on an empty vertex set")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(v, edges)


def format_edge_list(g: SimpleGraph) -> str:
    return "\n".join([f"{g.v} {g.E}"] + [f"{a} {b}" for a, b in g.edges]) + "\n"


def all_graphs(max_v: int, min_v: int = 1):
    """Every simple graph on ``min_v..max_v`` vertices up to isomorphism (max_v <= 7)."""
    import networkx as nx

    if max_v > 7:
        raise GraphError("the graph atlas stops at 7 vertices")
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if min_v <= n <= max_v:
            yield build_graph(n, nxg.edges())


def random_graph(rng, v: int, p: float | None = None) -> SimpleGraph:
    if p is None:
        p = rng.uniform(0.2, 0.8)
    return build_graph(v, [e for e in combinations(range(v), 2) if rng.random() < p])
