"""Rips complexes over finite vertex sets and the contraction toward a basepoint."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InputError, ResourceError
from .graph import Graph
from .homology import SimplicialComplex
from .metric import distance_table, geodesic


class RipsComplex:
    """Simplices are subsets of pairwise distance <= D with at most cap+1 points."""

    def __init__(self, points: Iterable, metric: Callable, D, cap: int = 2,
                 max_simplices: int = 500_000):
        if D <= 0:
            raise InputError("D must be positive")
        self.points = sorted(set(points))
        self.metric = metric
        self.D = D
        self.cap = cap
        self.max_simplices = max_simplices
        self._adj = None
        self._complex = None

    def close(self, a, b) -> bool:
        return self.metric(a, b) <= self.D

    def adjacency(self) -> dict:
        if self._adj is None:
            pts = self.points
            adj = {p: set() for p in pts}
            for i, a in enumerate(pts):
                for b in pts[i + 1:]:
                    if self.close(a, b):
                        adj[a].add(b)
                        adj[b].add(a)
            self._adj = adj
        return self._adj

    def contains(self, simplex: Sequence) -> bool:
        s = list(simplex)
        if not s or len(s) - 1 > self.cap or len(set(s)) != len(s):
            return False
        if any(p not in self.adjacency() for p in s):
            return False
        return all(self.close(s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s)))

    def simplices(self) -> list[tuple]:
        """All cliques of size <= cap+1, sorted by dimension then vertices."""
        adj = self.adjacency()
        out: list[tuple] = []
        order = {p: i for i, p in enumerate(self.points)}

        def extend(clique: tuple, cand: list):
            out.append(clique)
            if len(out) > self.max_simplices:
                raise ResourceError(f"Rips complex exceeds {self.max_simplices} simplices")
            if len(clique) > self.cap:
                return
            for i, p in enumerate(cand):
                extend(clique + (p,), [q for q in cand[i + 1:] if q in adj[p]])

        for p in self.points:
            extend((p,), sorted((q for q in adj[p] if order[q] > order[p]), key=order.get))
        return sorted(out, key=lambda s: (len(s), s))

    def complex(self) -> SimplicialComplex:
        if self._complex is None:
            self._complex = SimplicialComplex(self.simplices())
        return self._complex


def rips_complex(points: Iterable, metric: Callable, D, cap: int = 2,
                 max_simplices: int = 500_000) -> RipsComplex:
    return RipsComplex(points, metric, D, cap, max_simplices)


def graph_rips(G: Graph, D, cap: int = 2, vertices: Iterable | None = None,
               max_simplices: int = 500_000) -> RipsComplex:
    table = distance_table(G)
    pts = G.vertices() if vertices is None else vertices
    return RipsComplex(pts, table, D, cap, max_simplices)


# ---------------------------------------------------------------------------
# contraction


class ContractionFailure(RuntimeError):
    def __init__(self, pushed, replacement, neighbor, distance):
        super().__init__(f"replacement {replacement} for {pushed} is at distance "
                         f"{distance} from L-neighbor {neighbor}")
        self.pair = (replacement, neighbor)
        self.pushed = pushed


@dataclass
class Move:
    pushed: object
    replacement: object
    swept: list
    distance_before: int
    distance_after: int


@dataclass
class ContractionTrace:
    basepoint: object
    original: list
    moves: list = field(default_factory=list)
    final: list = field(default_factory=list)
    slack: Fraction = Fraction(0)
    precondition_ok: bool = True

    def __len__(self) -> int:
        return len(self.moves)

    def intermediate(self) -> list:
        return [m.replacement for m in self.moves]

    def path_of(self, v) -> list:
        """Positions visited by an original vertex, starting at v."""
        seq = [v]
        cur = v
        for m in self.moves:
            if m.pushed == cur:
                cur = m.replacement
                seq.append(cur)
        return seq

    def log(self) -> str:
        lines = [f"basepoint {self.basepoint}"]
        for m in self.moves:
            lines.append(f"move {m.pushed} -> {m.replacement} "
                         f"d {m.distance_before}->{m.distance_after} swept {len(m.swept)}")
        lines.append("final " + " ".join(map(str, self.final)))
        return "\n".join(lines) + "\n"


def contract_to_basepoint(G: Graph, R: RipsComplex, L: Sequence[Sequence], x0,
                          C: int = 0, delta=0) -> ContractionTrace:
    """Push the farthest vertex of L toward x0 until every vertex is within D.

    The farthest vertex v (ties: least label) is replaced by the vertex of
    R nearest to the point at distance D/2 from v on geodesic(x0, v); the
    replacement must be within C of that point and D-close to every current
    L-neighbor of v.
    """
    D = R.D
    d = distance_table(G)
    ok = D >= 4 * delta + 6 * C
    if not ok:
        warnings.warn(f"D = {D} is below 4*delta + 6*C = {4 * delta + 6 * C}", RuntimeWarning)
    if C == 0 and D % 2:
        raise InputError("D must be even when C = 0 so that D/2 lands on a vertex")
    simplices = [tuple(sorted(set(s))) for s in L]
    verts = sorted({v for s in simplices for v in s})
    if x0 not in G:
        raise InputError("basepoint not in graph")
    trace = ContractionTrace(x0, verts, slack=Fraction(C) + Fraction(delta), precondition_ok=ok)
    pool = R.points
    half = Fraction(D, 2)
    while True:
        current = sorted({v for s in simplices for v in s})
        far = max(current, key=lambda v: (d(x0, v), _neg(v, current)))
        dv = d(x0, far)
        if dv <= D:
            break
        path = geodesic(G, x0, far)
        pos = dv - half
        if pos.denominator == 1:
            y = path[int(pos)]
            cand = min(pool, key=lambda p: (d(p, y), p))
            gap = d(cand, y)
        else:  # midpoint of an edge
            a, b = path[int(pos)], path[int(pos) + 1]
            cand = min(pool, key=lambda p: (min(d(p, a), d(p, b)), p))
            gap = min(d(cand, a), d(cand, b)) + Fraction(1, 2)
        if gap > C:
            raise ContractionFailure(far, cand, None, gap)
        swept = [s for s in simplices if far in s]
        for s in swept:
            for w in s:
                if w != far and d(cand, w) > D:
                    raise ContractionFailure(far, cand, w, d(cand, w))
        trace.moves.append(Move(far, cand, swept, dv, d(x0, cand)))
        simplices = sorted({tuple(sorted(set(cand if v == far else v for v in s)))
                            for s in simplices})
    trace.final = sorted({v for s in simplices for v in s})
    return trace


def _neg(v, current):
    # ties among farthest vertices go to the least label
    return -current.index(v)


@dataclass
class HullReport:
    ok: bool
    worst: int
    offender: object = None
    bound: Fraction = Fraction(0)


def hull_check(trace: ContractionTrace, G: Graph, x0, C: int = 0, delta=0) -> HullReport:
    """Every intermediate vertex must lie within C + delta of some geodesic
    from x0 to an original vertex."""
    bound = Fraction(C) + Fraction(delta)
    if not trace.moves:
        return HullReport(True, 0, None, bound)
    d = distance_table(G)
    geos = [geodesic(G, x0, w) for w in trace.original]
    worst, offender = -1, None
    for p in trace.intermediate():
        gap = min(min(d(p, q) for q in g) for g in geos)
        if gap > worst:
            worst, offender = gap, p
    return HullReport(worst <= bound, worst, offender, bound)
