"""Graph metrics: Gromov products, geodesics, hyperbolicity estimates and
finite stand-ins for neighborhoods of boundary points."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .errors import InputError
from .graph import Graph


class DistanceTable:
    """All-pairs BFS distances of a finite graph, stored as a numpy array."""

    def __init__(self, G: Graph):
        self.G = G
        self.order = G.vertices()
        self.index = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        nbrs = [[self.index[w] for w in G.neighbors(v)] for v in self.order]
        rows = []
        for s in range(n):
            row = [-1] * n
            row[s] = 0
            frontier = [s]
            d = 0
            while frontier:
                d += 1
                nxt = []
                for u in frontier:
                    for w in nbrs[u]:
                        if row[w] < 0:
                            row[w] = d
                            nxt.append(w)
                frontier = nxt
            rows.append(row)
        D = np.array(rows, dtype=np.int32).reshape(n, n)
        self.D = D
        self._rows = rows

    @property
    def rows(self) -> list[list[int]]:
        """Distances as nested Python lists (fast scalar access)."""
        if self._rows is None:
            self._rows = self.D.tolist()
        return self._rows

    def geodesic_indices(self, i: int, j: int) -> list[int]:
        """Index path i -> j, stepping back from j to the least-label parent."""
        row = self.rows[i]
        if row[j] < 0:
            raise InputError("endpoints lie in different components")
        index, order, G = self.index, self.order, self.G
        path = [j]
        v = j
        while v != i:
            dv = row[v] - 1
            v = index[min(w for w in G.neighbors(order[v]) if row[index[w]] == dv)]
            path.append(v)
        return path[::-1]

    def __call__(self, x, y) -> int:
        d = int(self.D[self.index[x], self.index[y]])
        if d < 0:
            raise InputError(f"{x} and {y} lie in different components")
        return d

    @property
    def connected(self) -> bool:
        return bool((self.D >= 0).all())


def distance_table(G: Graph) -> DistanceTable:
    """All-pairs table, cached on the graph's metadata."""
    t = G.meta.get("_dist")
    if t is None or len(t.order) != len(G):
        t = DistanceTable(G)
        G.meta["_dist"] = t
    return t


def distance(G: Graph, x, y) -> int:
    return distance_table(G)(x, y)


def gromov_product(G: Graph, x, y, z, dist: DistanceTable | None = None) -> Fraction:
    """<x|y>_z = (d(z,x) + d(z,y) - d(x,y)) / 2."""
    d = dist or distance_table(G)
    return Fraction(d(z, x) + d(z, y) - d(x, y), 2)


def geodesic(G: Graph, x, y) -> list:
    """A shortest path from x to y; each step back from y takes the least label."""
    if x not in G or y not in G:
        raise InputError("endpoint not in graph")
    dist = G.bfs(x)
    if y not in dist:
        raise InputError(f"{x} and {y} lie in different components")
    path = [y]
    v = y
    while v != x:
        v = min(w for w in G.neighbors(v) if dist.get(w, -1) == dist[v] - 1)
        path.append(v)
    return path[::-1]


def distance_to_path(G: Graph, z, path: Sequence, dist: DistanceTable | None = None) -> int:
    d = dist or distance_table(G)
    return min(d(z, p) for p in path)


# ---------------------------------------------------------------------------
# hyperbolicity


@dataclass
class DeltaReport:
    delta_thin: Fraction
    delta_four_point: Fraction
    sample_size: int
    triangles: int
    quadruples: int
    exhaustive: bool
    seed: int | None = None
    sampled_triples: list = field(default_factory=list, repr=False)

    def record(self) -> str:
        rows = [("delta_thin", self.delta_thin), ("delta_four_point", self.delta_four_point),
                ("sample_size", self.sample_size), ("triangles", self.triangles),
                ("quadruples", self.quadruples), ("exhaustive", self.exhaustive),
                ("seed", self.seed)]
        return "".join(f"{k}={v}\n" for k, v in rows)


def _point_distance(D, p, q) -> int:
    """Doubled distance between points given as (a, b) with a == b for vertices."""
    a, b = p
    c, d = q
    if a == b and c == d:
        return 2 * D[a][c]
    if a == b:
        return 2 * min(D[a][c], D[a][d]) + 1
    if c == d:
        return 2 * min(D[c][a], D[c][b]) + 1
    if {a, b} == {c, d}:
        return 0
    return 2 * min(D[a][c], D[a][d], D[b][c], D[b][d]) + 2


def _point_on(path: Sequence[int], h: int):
    """Point at doubled position h along a vertex path."""
    if h % 2 == 0:
        v = path[h // 2]
        return (v, v)
    return (path[h // 2], path[h // 2 + 1])


def triangle_thinness(D, sides: dict) -> Fraction:
    """Max distance between points identified by the comparison tripod.

    ``D`` is a nested list of distances and ``sides[(i, j)]`` a vertex-index
    path from corner i to corner j for the pairs (0,1), (1,2), (0,2).
    """
    def side(i, j):
        return sides[(i, j)] if (i, j) in sides else sides[(j, i)][::-1]

    corners = [sides[(0, 1)][0], sides[(1, 2)][0], sides[(1, 2)][-1]]
    worst = 0
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        a, b, c = corners[i], corners[j], corners[k]
        leg2 = D[a][b] + D[a][c] - D[b][c]  # doubled insize at corner i
        p1, p2 = side(i, j), side(i, k)
        for h in range(leg2 + 1):
            d = _point_distance(D, _point_on(p1, h), _point_on(p2, h))
            if d > worst:
                worst = d
    return Fraction(worst, 2)


def four_point_defects(D: np.ndarray, quads: np.ndarray) -> np.ndarray:
    """Doubled four-point defects (largest minus middle pair sum)."""
    i, j, k, l = quads.T
    s = np.stack([D[i, j] + D[k, l], D[i, k] + D[j, l], D[i, l] + D[j, k]], axis=1)
    s.sort(axis=1)
    return s[:, 2] - s[:, 1]


def _choose(n: int, r: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Either all r-subsets of range(n) or ``count`` random sorted r-subsets."""
    total = comb(n, r)
    if total <= count:
        return np.array(list(combinations(range(n), r)), dtype=np.int64).reshape(-1, r)
    out = np.empty((count, r), dtype=np.int64)
    filled = 0
    while filled < count:
        cand = rng.integers(0, n, size=(2 * (count - filled), r))
        cand.sort(axis=1)
        ok = np.all(np.diff(cand, axis=1) > 0, axis=1)
        cand = cand[ok][: count - filled]
        out[filled: filled + len(cand)] = cand
        filled += len(cand)
    return out


def delta_estimate(G: Graph, samples: int = 2000, seed: int = 0,
                   triangle_samples: int | None = None) -> DeltaReport:
    """Thin-triangle and four-point estimates of delta.

    Configurations are enumerated exhaustively when their number is at most
    ``samples``, otherwise drawn with a seeded generator.
    """
    if samples < 1:
        raise InputError("samples must be positive")
    table = distance_table(G)
    if not table.connected:
        raise InputError("graph is not connected")
    D = table.D.astype(np.int64)
    n = len(table.order)
    rng = np.random.default_rng(seed)
    tri_n = samples if triangle_samples is None else triangle_samples
    triples = _choose(n, 3, tri_n, rng) if n >= 3 else np.zeros((0, 3), dtype=np.int64)
    quads = _choose(n, 4, samples, rng) if n >= 4 else np.zeros((0, 4), dtype=np.int64)
    thin = Fraction(0)
    order = table.order
    sampled = []
    rows = table.rows
    for i, j, k in triples.tolist():
        sides = {(0, 1): table.geodesic_indices(i, j),
                 (1, 2): table.geodesic_indices(j, k),
                 (0, 2): table.geodesic_indices(i, k)}
        thin = max(thin, triangle_thinness(rows, sides))
        sampled.append((order[i], order[j], order[k]))
    fp = Fraction(int(four_point_defects(D, quads).max()), 2) if len(quads) else Fraction(0)
    exhaustive = len(triples) == comb(n, 3) and len(quads) == comb(n, 4)
    return DeltaReport(thin, fp, len(triples) + len(quads), len(triples), len(quads),
                       exhaustive, seed, sampled)


def gromov_geodesic_gaps(G: Graph, triples: Sequence[Sequence]) -> list[Fraction]:
    """|<x|y>_z - d(z, geodesic(x, y))| for each triple (x, y, z)."""
    table = distance_table(G)
    rows, idx = table.rows, table.index
    out = []
    for x, y, z in triples:
        path = table.geodesic_indices(idx[x], idx[y])
        rz = rows[idx[z]]
        gap = Fraction(min(rz[p] for p in path)) - gromov_product(G, x, y, z, table)
        out.append(abs(gap))
    return out


def random_triples(G: Graph, count: int, seed: int = 0) -> list[tuple]:
    rng = np.random.default_rng(seed)
    order = G.vertices()
    picks = rng.integers(0, len(order), size=(count, 3)).tolist()
    return [tuple(order[i] for i in t) for t in picks]


def hyperbolic_inequality_violation(G: Graph, quad: Sequence, dist: DistanceTable | None = None) -> Fraction:
    """Largest min(<x|z>_w, <z|y>_w) - <x|y>_w over all role assignments."""
    d = dist or distance_table(G)
    worst = Fraction(-10**9)
    for w in quad:
        rest = [v for v in quad if v != w]
        for z in rest:
            x, y = [v for v in rest if v != z]
            gap = min(gromov_product(G, x, z, w, d), gromov_product(G, z, y, w, d)) \
                - gromov_product(G, x, y, w, d)
            worst = max(worst, gap)
    return worst


# ---------------------------------------------------------------------------
# boundary proxies


@dataclass(frozen=True)
class BoundaryProxy:
    """Finite stand-in for a boundary point.

    ``parabolic`` names a registered coset and targets the deepest vertex
    of its horoball; ``conical`` carries a period word and targets the
    farthest vertex of the ray period^k present in the graph.
    """

    kind: str
    basepoint: object
    coset: str | None = None
    period: tuple | None = None

    def __post_init__(self):
        if self.kind == "parabolic" and not self.coset:
            raise InputError("parabolic proxy needs a coset")
        if self.kind == "conical" and not self.period:
            raise InputError("conical proxy needs a nonempty period")
        if self.kind not in ("parabolic", "conical"):
            raise InputError(f"unknown proxy kind {self.kind!r}")

    def ray(self, G: Graph) -> list:
        """Vertices of the proxy ray present in G, nearest first."""
        from .cusped import DepthVertex
        from .groups import format_word, normal_form, parse_word
        if self.kind == "parabolic":
            reg = G.meta.get("registry", {})
            if self.coset not in reg:
                raise InputError(f"unknown coset {self.coset!r}")
            rep = reg[self.coset].rep
            out = [DepthVertex(0, "", rep)]
            t = 1
            while DepthVertex(t, self.coset, rep) in G:
                out.append(DepthVertex(t, self.coset, rep))
                t += 1
            return out
        spec = G.meta["spec"]
        wrap = (lambda s: DepthVertex(0, "", s)) if isinstance(self.basepoint, DepthVertex) \
            else (lambda s: s)
        period = self.period
        if isinstance(period, str) or any(isinstance(x, str) for x in period):
            period = parse_word(spec, period if isinstance(period, str) else " ".join(period))
        out = []
        w: tuple = ()
        while True:
            w = normal_form(spec, w + tuple(period))
            v = wrap(format_word(spec, w))
            if v not in G:
                break
            out.append(v)
        if not out:
            raise InputError("conical ray leaves the graph immediately")
        return out

    def target(self, G: Graph):
        return self.ray(G)[-1]


def neighborhood_V(G: Graph, z: BoundaryProxy, n, target=None) -> list:
    """Sorted vertices y with <y|target>_basepoint >= n."""
    d = distance_table(G)
    t = z.target(G) if target is None else target
    b = z.basepoint
    return sorted(y for y in G.vertices() if gromov_product(G, y, t, b, d) >= n)


def proxy_sensitivity(G: Graph, z: BoundaryProxy, n) -> list[dict]:
    """How V(z, n) changes when the proxy target moves along its ray."""
    ray = z.ray(G)
    final = set(neighborhood_V(G, z, n, ray[-1]))
    out = []
    for i, t in enumerate(ray):
        V = set(neighborhood_V(G, z, n, t))
        out.append({"target": str(t), "size": len(V), "sym_diff_to_deepest": len(V ^ final)})
    return out


# ---------------------------------------------------------------------------
# ends


def complement_components(G: Graph, center, n: int) -> list[list]:
    """Components of the induced subgraph on vertices at distance >= n."""
    dist = G.bfs(center)
    return G.components(v for v, d in dist.items() if d >= n)


def ends_profile(G: Graph, center, radii: Sequence[int]) -> dict:
    counts = [len(complement_components(G, center, n)) for n in radii]
    if all(c == 1 for c in counts):
        verdict = "1 end"
    elif all(c == 2 for c in counts):
        verdict = "2 ends"
    elif all(a < b for a, b in zip(counts, counts[1:])):
        verdict = "growing"
    else:
        verdict = "inconclusive"
    return {"radii": list(radii), "counts": counts, "verdict": verdict}
