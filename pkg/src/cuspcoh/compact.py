"""Compactly supported cohomology through exhaustion pro-systems.

H_c^k(X) is approximated by the direct system H^k(X, L_n), where L_n is the
full subcomplex on vertices at combinatorial distance >= n from a basepoint.
The relative cochains at stage n live on simplices with a vertex at
distance < n, so every stage is a finite computation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GuardError, InputError
from .homology import (AbelianGroup, ChainComplex, CohomologyClasses, InducedMap,
                       SimplicialComplex, SparseMatrix, chain_complex, cochain_complex_on,
                       extension_by_zero, inclusion_image_rank, map_classes,
                       relative_cochain_complex, restriction, hermite_normal_form,
                       integer_kernel)

MATRIX_LIMIT = 400  # stage size up to which explicit induced matrices are built


# ---------------------------------------------------------------------------
# exhaustible spaces


class FiniteExhaustion:
    """A finite complex with a level function, standing in for a locally finite space.

    ``extent`` is the level at which the finite model stops agreeing with
    the space it approximates; stages must stay ``margin`` below it.
    Levels default to the graph distance from ``basepoint``.
    """

    def __init__(self, X: SimplicialComplex, basepoint=None, levels: dict | None = None,
                 extent: int | None = None):
        self.X = X
        if levels is None:
            if basepoint is None:
                basepoint = X.vertices()[0]
            levels = _bfs_levels(X, basepoint)
        self.basepoint = basepoint
        self._levels = levels
        self.extent = extent if extent is not None else max(levels.values()) + 1

    def levels(self, max_level: int | None = None) -> dict:
        if max_level is None:
            return dict(self._levels)
        return {v: d for v, d in self._levels.items() if d <= max_level}

    def full_subcomplex(self, vertices) -> SimplicialComplex:
        return self.X.full_subcomplex(vertices)


class ComplexExhaustion:
    """Adapter for :class:`~cuspcoh.cusped.CuspedComplex`."""

    def __init__(self, C):
        self.C = C
        self.basepoint = C.basepoint
        self.extent = min(C.R, C.T)

    def levels(self, max_level: int | None = None) -> dict:
        return self.C.levels(max_level)

    def full_subcomplex(self, vertices) -> SimplicialComplex:
        return self.C.full_subcomplex(vertices)


def _bfs_levels(X: SimplicialComplex, source) -> dict:
    adj: dict = {v: [] for v in X.vertices()}
    for a, b in X.simplices(1):
        adj[a].append(b)
        adj[b].append(a)
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def as_exhaustible(X):
    from .cusped import CuspedComplex
    if isinstance(X, CuspedComplex):
        return ComplexExhaustion(X)
    if isinstance(X, SimplicialComplex):
        return FiniteExhaustion(X)
    return X


def line_complex(N: int) -> FiniteExhaustion:
    """Cayley graph of Z on [-N, N]."""
    X = SimplicialComplex([(i, i + 1) for i in range(-N, N)])
    return FiniteExhaustion(X, basepoint=0, extent=N)


def ray_complex(N: int) -> FiniteExhaustion:
    X = SimplicialComplex([(i, i + 1) for i in range(N)])
    return FiniteExhaustion(X, basepoint=0, extent=N)


def prism(K: SimplicialComplex, T: int) -> SimplicialComplex:
    """K x [0, T] with the standard prism triangulation; vertices (t, v)."""
    X = SimplicialComplex()
    for v in K.vertices():
        X.add(((0, v),))
    for d in range(K.dim + 1):
        for s in K.simplices(d):
            for t in range(T):
                for i in range(len(s)):
                    X.add([(t, v) for v in s[: i + 1]] + [(t + 1, v) for v in s[i:]])
    return X


def cylinder_complex(K: SimplicialComplex, T: int) -> FiniteExhaustion:
    """Half-open cylinder [0, oo) x K truncated at T, levels along the interval."""
    X = prism(K, T)
    levels = {v: v[0] for v in X.vertices()}
    return FiniteExhaustion(X, basepoint=X.vertices()[0], levels=levels, extent=T)


# ---------------------------------------------------------------------------
# pro-systems


@dataclass
class ExhaustionSchedule:
    radii: tuple
    basepoint: object = None
    margin: int = 2

    def __post_init__(self):
        self.radii = tuple(int(r) for r in self.radii)
        if not self.radii or any(r < 1 for r in self.radii):
            raise InputError("radii must be positive")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise InputError("radii must be strictly increasing")

    @classmethod
    def upto(cls, n: int, start: int = 1, margin: int = 2) -> "ExhaustionSchedule":
        return cls(tuple(range(start, n + 1)), margin=margin)


@dataclass
class ProSystem:
    degree: int
    radii: tuple
    stages: list
    connecting: list
    image_ranks: dict = field(default_factory=dict)

    def image_rank(self, i: int, j: int) -> int | None:
        if i == j:
            return self.stages[i].rank
        return self.image_ranks.get((i, j))

    def csv(self) -> str:
        lines = ["stage_radius,rank,torsion,image_rank_next"]
        for i, (r, g) in enumerate(zip(self.radii, self.stages)):
            nxt = self.image_ranks.get((i, i + 1))
            tors = ";".join(map(str, g.torsion))
            lines.append(f"{r},{g.rank},{tors},{'' if nxt is None else nxt}")
        return "\n".join(lines) + "\n"


def check_guard(X, schedule: ExhaustionSchedule) -> int:
    safe = X.extent - schedule.margin
    if max(schedule.radii) > safe:
        raise GuardError(
            f"radius {max(schedule.radii)} reaches the truncation boundary; "
            f"maximal safe radius is {safe}", safe_radius=safe)
    return safe


def stage_cells(S: SimplicialComplex, lev: dict, n: int, dims: Iterable[int]) -> dict:
    """Simplices of S (in the given dimensions) with a vertex at level < n."""
    return {d: [s for s in S.simplices(d) if min(lev[v] for v in s) < n]
            for d in dims if d >= 0}


def stage_complexes(X, k: int, schedule: ExhaustionSchedule) -> list[ChainComplex]:
    X = as_exhaustible(X)
    check_guard(X, schedule)
    lev = X.levels(max(schedule.radii))
    S = X.full_subcomplex(lev)
    return [cochain_complex_on(stage_cells(S, lev, n, range(k - 1, k + 2)))
            for n in schedule.radii]


def hc_pro_system(X, k: int, schedule: ExhaustionSchedule,
                  pairs: str = "all", matrices: bool | None = None) -> ProSystem:
    """Direct system H^k(X, L_n) over the schedule.

    ``pairs`` selects which composite image ranks are computed: "all" or
    "needed" (consecutive, into the last stage, and inside the last window).
    """
    stages = stage_complexes(X, k, schedule)
    groups = [C.homology(k) for C in stages]
    m = len(stages)
    wanted = set()
    for i in range(m):
        for j in range(i + 1, m):
            if pairs == "all" or j == i + 1 or j == m - 1 or i >= m - 3:
                wanted.add((i, j))
    ranks = {(i, j): inclusion_image_rank(stages[i], stages[j], k) for i, j in sorted(wanted)}
    if matrices is None:
        matrices = all(C.size(k) <= MATRIX_LIMIT for C in stages)
    connecting = []
    if matrices:
        classes = [CohomologyClasses(C, k) for C in stages]
        for i in range(m - 1):
            a, b = classes[i], classes[i + 1]
            connecting.append(map_classes(a, b, extension_by_zero(a.basis, b.basis)))
    else:
        connecting = [None] * (m - 1)
    return ProSystem(k, schedule.radii, groups, connecting, ranks)


@dataclass
class ProVerdict:
    classification: str  # pro-trivial | stable | growing | inconclusive
    rank: int | None = None
    torsion: tuple = ()
    evidence: dict = field(default_factory=dict)

    def __str__(self) -> str:
        if self.classification == "stable":
            t = ",".join(map(str, self.torsion))
            return f"stable({self.rank}{';' + t if t else ''})"
        return self.classification

    @classmethod
    def parse(cls, text: str) -> "ProVerdict":
        text = text.strip()
        if text.startswith("stable"):
            inner = text[text.index("(") + 1: text.rindex(")")]
            r, _, t = inner.partition(";")
            return cls("stable", int(r), tuple(int(x) for x in t.split(",") if x))
        if text not in ("pro-trivial", "growing", "inconclusive"):
            raise InputError(f"unknown verdict {text!r}")
        return cls(text)

    def matches(self, other: "ProVerdict") -> bool:
        return str(self) == str(other)


def pro_classify(P: ProSystem, window: int = 3) -> ProVerdict:
    m = len(P.stages)
    ev = {"stage_ranks": [g.rank for g in P.stages],
          "stage_torsion": [list(g.torsion) for g in P.stages],
          "window": window}
    if m < 4:
        ev["reason"] = "fewer than 4 stages"
        return ProVerdict("inconclusive", evidence=ev)
    W = list(range(m - window, m))
    comp = {}
    for a in W:
        for b in W:
            if a < b:
                r = P.image_rank(a, b)
                if r is None:
                    ev["reason"] = f"missing composite {a}->{b}"
                    return ProVerdict("inconclusive", evidence=ev)
                comp[(a, b)] = r
    ev["window_composites"] = {f"{a}->{b}": r for (a, b), r in comp.items()}
    tors = [P.stages[i].torsion for i in W]
    if all(r == 0 for r in comp.values()):
        if not any(tors) or _torsion_maps_zero(P, W):
            return ProVerdict("pro-trivial", evidence=ev)
    vals = set(comp.values())
    if len(vals) == 1 and min(vals) >= 1:
        common = tors[0] if all(t == tors[0] for t in tors) else ()
        return ProVerdict("stable", rank=vals.pop(), torsion=tuple(common), evidence=ev)
    to_last = [P.image_rank(i, m - 1) for i in range(m - 1)]
    nxt = [P.image_rank(i, i + 1) for i in range(m - 1)]
    ev["to_last"] = to_last
    ev["consecutive"] = nxt
    if None not in to_last and None not in nxt:
        inc = all(a < b for a, b in zip(to_last, to_last[1:]))
        inc_next = all(a < b for a, b in zip(nxt, nxt[1:]))
        if inc and inc_next:
            return ProVerdict("growing", evidence=ev)
    ev["reason"] = "no pattern over the window"
    return ProVerdict("inconclusive", evidence=ev)


def _torsion_maps_zero(P: ProSystem, W: Sequence[int]) -> bool:
    maps = [P.connecting[i] for i in W[:-1]]
    if any(M is None for M in maps):
        return False
    total = maps[0]
    for M in maps[1:]:
        total = total.compose(M)
    return all(M.is_zero() for M in maps) or total.is_zero()


def cylinder_vanishing_test(K: SimplicialComplex, T: int, schedule: ExhaustionSchedule,
                            degrees: Iterable[int] | None = None) -> dict[int, ProVerdict]:
    X = cylinder_complex(K, T)
    if degrees is None:
        degrees = range(K.dim + 2)
    return {k: pro_classify(hc_pro_system(X, k, schedule)) for k in degrees}


def boundary_dim_estimate(verdicts: dict[int, ProVerdict]) -> dict:
    """(largest degree whose verdict is not pro-trivial) - 1."""
    if not verdicts:
        return {"estimate": None, "reason": "no verdicts"}
    top = max(verdicts)
    live = [k for k, v in verdicts.items() if v.classification != "pro-trivial"]
    if verdicts[top].classification == "inconclusive":
        return {"estimate": None, "reason": f"degree {top} inconclusive"}
    if not live:
        return {"estimate": None, "reason": "all degrees pro-trivial"}
    k = max(live)
    if verdicts[k].classification == "inconclusive":
        return {"estimate": None, "reason": f"degree {k} inconclusive"}
    return {"estimate": k - 1, "degree": k, "conditional": True}


# ---------------------------------------------------------------------------
# long exact sequence of a pair


@dataclass
class LESReport:
    groups: list  # (label, AbelianGroup) in sequence order
    slots: list   # (label, exact: bool)

    @property
    def exact(self) -> bool:
        return all(ok for _, ok in self.slots)


def les_check(X: SimplicialComplex, F: SimplicialComplex) -> LESReport:
    """Verify exactness of H^i(X,F) -> H^i(X) -> H^i(F) -> H^{i+1}(X,F) -> ...

    The first term is H_c of X minus F. Each map is computed on explicit
    generators and exactness is checked as equality of integer lattices.
    """
    if not F.is_subcomplex_of(X):
        raise InputError("F is not a subcomplex of X")
    top = X.dim
    rel = relative_cochain_complex(X, F)
    full = chain_complex(X).dual()
    sub = chain_complex(F).dual() if len(F) else ChainComplex({}, {}, +1)
    Xc = {k: CohomologyClasses(full, k) for k in range(top + 2)}
    Rc = {k: CohomologyClasses(rel, k) for k in range(top + 2)}
    Fc = {k: CohomologyClasses(sub, k) for k in range(top + 2)}
    seq = []  # (label, classes)
    maps = []  # InducedMap from seq[i] to seq[i+1]
    for i in range(top + 1):
        r, x, f = Rc[i], Xc[i], Fc[i]
        seq += [(f"Hc^{i}(U)", r), (f"H^{i}(X)", x), (f"H^{i}(F)", f)]
        maps.append(map_classes(r, x, extension_by_zero(r.basis, x.basis)))
        maps.append(map_classes(x, f, restriction(x.basis, f.basis)))
        maps.append(map_classes(f, Rc[i + 1], _connecting(X, f, Rc[i + 1], full, i)))
    slots = []
    for pos, (label, cls) in enumerate(seq):
        incoming = maps[pos - 1] if pos > 0 else None
        outgoing = maps[pos] if pos < len(maps) else None
        nxt = seq[pos + 1][1] if pos + 1 < len(seq) else Rc[top + 1]
        slots.append((label, _exact_at(cls, incoming, outgoing, nxt)))
    return LESReport([(label, c.group) for label, c in seq], slots)


def _connecting(X: SimplicialComplex, f: CohomologyClasses, target: CohomologyClasses,
                full: ChainComplex, i: int):
    """Extend a cocycle of F by zero, apply the coboundary of X, keep X minus F."""
    xbasis = X.simplices(i)
    ext = extension_by_zero(f.basis, xbasis)
    delta = full.out_map(i)
    pos = {s: j for j, s in enumerate(X.simplices(i + 1))}
    idx = [pos[s] for s in target.basis]

    def g(c):
        y = delta.matvec(ext(c)) if delta.nrows else []
        return [y[j] for j in idx]

    return g


def _relations(cls: CohomologyClasses) -> list[list[int]]:
    n = cls.group.ngens
    rows = []
    for i, d in enumerate(cls.orders):
        if d:
            rows.append([d if j == i else 0 for j in range(n)])
    return rows


def _exact_at(cls: CohomologyClasses, incoming: InducedMap | None,
              outgoing: InducedMap | None, nxt: CohomologyClasses) -> bool:
    n = cls.group.ngens
    if n == 0:
        return True
    rel = _relations(cls)
    image = list(rel)
    if incoming is not None and incoming.matrix:
        cols = len(incoming.matrix[0]) if incoming.matrix else 0
        image += [[incoming.matrix[r][c] for r in range(n)] for c in range(cols)]
    if outgoing is None or not outgoing.matrix:
        kernel = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    else:
        rel_next = _relations(nxt)
        m = len(outgoing.matrix)
        A = [list(outgoing.matrix[r]) + [row[r] for row in rel_next] for r in range(m)]
        ker = integer_kernel(A, n + len(rel_next))
        kernel = [row[:n] for row in ker] + rel
    return hermite_normal_form(image, n) == hermite_normal_form(kernel, n)


# ---------------------------------------------------------------------------
# regularity


@dataclass
class RegularityReport:
    mode: str
    degree: int
    target_support: int
    target_radius: int
    found: bool
    primitive_radius: int | None = None
    primitive: dict = field(default_factory=dict)
    status: str = ""
    certificate: object = None
    tried: list = field(default_factory=list)

    def record(self) -> str:
        rows = [("mode", self.mode), ("degree", self.degree),
                ("target_support", self.target_support), ("target_radius", self.target_radius),
                ("found", self.found), ("primitive_radius", self.primitive_radius),
                ("primitive_support", len(self.primitive)), ("status", self.status),
                ("tried", ",".join(map(str, self.tried)))]
        return "".join(f"{k}={'' if v is None else v}\n" for k, v in rows)


def _ball_around(X, seeds: Iterable, r: int, allowed=None) -> dict:
    """Vertices within r of the seed set in the 1-skeleton, with distances."""
    dist = {v: 0 for v in seeds}
    frontier = list(dist)
    for step in range(1, r + 1):
        nxt = []
        for u in frontier:
            for w in X.neighbors(u):
                if w not in dist and (allowed is None or allowed(w)):
                    dist[w] = step
                    nxt.append(w)
        frontier = nxt
    return dist


class _LocalView:
    """Neighbor access for finite complexes, matching CuspedComplex."""

    def __init__(self, X: SimplicialComplex):
        self.X = X
        self.adj = {v: set() for v in X.vertices()}
        for a, b in X.simplices(1):
            self.adj[a].add(b)
            self.adj[b].add(a)

    def neighbors(self, v):
        return sorted(self.adj[v])

    def full_subcomplex(self, vertices):
        return self.X.full_subcomplex(vertices)


def _guard_test(X):
    from .cusped import CuspedComplex
    if isinstance(X, CuspedComplex):
        def ok(v):
            if v.depth >= X.T:
                return False
            return len(X.word(v.base)) < X.R
        return ok
    return None


def coboundary_of(X, cell: tuple) -> dict:
    """delta of the dual cochain of ``cell``: signed cofaces."""
    view = X if hasattr(X, "neighbors") else _LocalView(X)
    k = len(cell) - 1
    around = _ball_around(view, cell, 1)
    S = view.full_subcomplex(around)
    out = {}
    for s in S.simplices(k + 1):
        if all(v in s for v in cell):
            pos = next(j for j in range(len(s)) if s[:j] + s[j + 1:] == cell)
            out[s] = -1 if pos % 2 else 1
    return out


def boundary_of(cell: tuple) -> dict:
    return {cell[:j] + cell[j + 1:]: (-1 if j % 2 else 1) for j in range(len(cell))}


def _solve_on(S: SimplicialComplex, unknown: list, rows_cells: list, c: dict, mode: str):
    """Integer solve of delta d = c (cochain) or boundary d = c (chain)."""
    upos = {s: j for j, s in enumerate(unknown)}
    rpos = {s: i for i, s in enumerate(rows_cells)}
    M = SparseMatrix(len(rows_cells), len(unknown))
    if mode == "cochain":
        for i, s in enumerate(rows_cells):
            for j in range(len(s)):
                f = s[:j] + s[j + 1:]
                if f in upos:
                    M.rows[i][upos[f]] = -1 if j % 2 else 1
    else:
        for col, s in enumerate(unknown):
            for j in range(len(s)):
                f = s[:j] + s[j + 1:]
                if f in rpos:
                    M.rows[rpos[f]][col] = -1 if j % 2 else 1
    b = [c.get(s, 0) for s in rows_cells]
    x = M.solve(b)
    if x is None:
        return None
    return {s: v for s, v in zip(unknown, x) if v}


def regularity_probe(X, c: dict, mode: str = "cochain", V: Iterable | None = None,
                     max_radius: int = 4) -> RegularityReport:
    """Find d with delta d = c (or boundary d = c) supported near supp(c).

    The U-region at radius r is the full subcomplex on vertices within r of
    the vertices of supp(c). Radii grow from 0 to ``max_radius`` but never
    past the truncation guard. ``c`` maps sorted simplices to integers.
    """
    if mode not in ("cochain", "chain"):
        raise InputError("mode must be 'cochain' or 'chain'")
    view = X if hasattr(X, "neighbors") else _LocalView(X)
    support = [s for s, v in c.items() if v]
    if not support:
        return RegularityReport(mode, -1, 0, 0, True, 0, {}, "trivial target", tried=[0])
    degree = len(support[0]) - 1
    if any(len(s) - 1 != degree for s in support):
        raise InputError("target mixes degrees")
    seeds = sorted({v for s in support for v in s})
    if V is not None:
        Vset = set(V)
        if not set(seeds) <= Vset:
            raise InputError("target is not supported in V")
    allowed = _guard_test(X)
    if allowed is not None and not all(allowed(v) for v in seeds):
        raise GuardError("target touches the truncation boundary", safe_radius=None)
    # guarded reach: radius up to which every vertex stays inside the guard
    outer = _ball_around(view, seeds, max_radius + 1)
    reach = max_radius
    if allowed is not None:
        bad = [d for v, d in outer.items() if not allowed(v)]
        if bad:
            reach = min(max_radius, min(bad) - 1)
    target_radius = 0
    S = view.full_subcomplex(v for v, d in outer.items() if d <= reach + 1)
    k_unknown = degree - 1 if mode == "cochain" else degree + 1
    if reach < 0:
        return RegularityReport(mode, degree, len(support), target_radius, False,
                                status="radius exceeded", tried=[])

    def region(r):
        keep = {v for v, d in outer.items() if d <= r}
        unknown = [s for s in S.simplices(k_unknown) if all(v in keep for v in s)]
        if mode == "cochain":
            ukeys = set(unknown)
            rows_cells = [s for s in S.simplices(degree)
                          if s in c or any(s[:j] + s[j + 1:] in ukeys for j in range(len(s)))]
        else:
            rows_cells = sorted({s[:j] + s[j + 1:] for s in unknown for j in range(len(s))}
                                | set(support))
        return unknown, rows_cells

    # global check on the whole guarded region
    unknown, rows_cells = region(reach)
    sol = _solve_on(S, unknown, rows_cells, c, mode)
    if sol is None:
        rep = RegularityReport(mode, degree, len(support), target_radius, False,
                               status="not a (co)boundary in the guarded region", tried=[reach])
        rep.certificate = {"region_radius": reach}
        return rep
    tried = []
    for r in range(0, reach + 1):
        tried.append(r)
        unknown, rows_cells = region(r)
        sol = _solve_on(S, unknown, rows_cells, c, mode)
        if sol is not None:
            rad = max(max(outer[v] for v in s) for s in sol) if sol else 0
            return RegularityReport(mode, degree, len(support), target_radius, True, rad, sol,
                                    "found", tried=tried)
    return RegularityReport(mode, degree, len(support), target_radius, False,
                            status="radius exceeded", tried=tried)


# ---------------------------------------------------------------------------
# local homology near boundary proxies


def _reduced_h0_map_zero(inner_comps: list, outer_comps: list) -> bool:
    if not inner_comps:
        return True
    where = {}
    for idx, comp in enumerate(outer_comps):
        for v in comp:
            where[v] = idx
    return len({where[c[0]] for c in inner_comps}) <= 1


def _rips_components(rips) -> list:
    adj = rips.adjacency()
    seen, comps = set(), []
    for p in rips.points:
        if p in seen:
            continue
        comp, stack = [p], [p]
        seen.add(p)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _h1_image(inner_rips, outer_rips) -> dict:
    """H1 of both Rips 2-skeleta and the rank of the inclusion map."""
    A = chain_complex(inner_rips.complex())
    B = chain_complex(outer_rips.complex())
    ha, hb = A.homology(1), B.homology(1)
    nA = A.size(1)
    zA = nA - A.out_map(1).rank()
    inc = B.in_map(1)
    inA = set(A.bases.get(1, ()))
    outside = [i for i, s in enumerate(B.bases.get(1, ())) if s not in inA]
    rank = zA - inc.rank() + inc.select_rows(outside).rank()
    zero = rank == 0
    if zero and ha.torsion:
        ca, cb = CohomologyClasses(A, 1), CohomologyClasses(B, 1)
        zero = map_classes(ca, cb, extension_by_zero(ca.basis, cb.basis)).is_zero()
    return {"inner": ha, "outer": hb, "image_rank": rank, "zero": zero}


def local_homology_probe(G, z, gaps: Sequence[tuple[int, int]], D, C: int = 0, delta=0,
                         max_simplices: int = 300_000) -> list[dict]:
    """Inclusion-induced maps on reduced H0 and H1 of Rips(V(z, n)).

    ``gaps`` lists (n_outer, n_inner) pairs; a gap is compliant when
    n_inner >= 2 n_outer + C + 4 delta.
    """
    from .metric import distance_table, neighborhood_V
    from .rips import RipsComplex
    from .errors import ResourceError
    table = distance_table(G)
    out = []
    for n_out, n_in in gaps:
        need = 2 * n_out + C + 4 * delta
        row = {"n_outer": n_out, "n_inner": n_in, "threshold": need,
               "compliant": n_in >= need}
        V_out = neighborhood_V(G, z, n_out)
        V_in = neighborhood_V(G, z, n_in)
        row["size_outer"], row["size_inner"] = len(V_out), len(V_in)
        if not V_in:
            row["status"] = "inconclusive"
            row["reason"] = "inner neighborhood is empty"
            out.append(row)
            continue
        r_in = RipsComplex(V_in, table, D, 2, max_simplices)
        r_out = RipsComplex(V_out, table, D, 2, max_simplices)
        ci, co = _rips_components(r_in), _rips_components(r_out)
        row["h0_inner"], row["h0_outer"] = len(ci) - 1, len(co) - 1
        row["h0_zero"] = _reduced_h0_map_zero(ci, co)
        try:
            if _diameter(table, V_out) <= D:
                h1 = {"inner": ZERO_GROUP, "outer": ZERO_GROUP, "image_rank": 0, "zero": True,
                      "note": "outer set spans a simplex"}
            else:
                h1 = _h1_image(r_in, r_out)
            row["h1_inner"], row["h1_outer"] = str(h1["inner"]), str(h1["outer"])
            row["h1_image_rank"] = h1["image_rank"]
            row["h1_zero"] = h1["zero"]
        except ResourceError as exc:
            row["h1_zero"] = None
            row["reason"] = str(exc)
        if row["h0_zero"] and row.get("h1_zero"):
            row["status"] = "vanishes"
        elif row["h0_zero"] is False or row.get("h1_zero") is False:
            row["status"] = "nonvanishing"
        else:
            row["status"] = "inconclusive"
        out.append(row)
    return out


ZERO_GROUP = AbelianGroup()


def _diameter(table, verts) -> int:
    idx = [table.index[v] for v in verts]
    if not idx:
        return 0
    return int(table.D[idx][:, idx].max())


def random_local_target(X, center, radius: int, degree: int, mode: str = "cochain",
                        seed: int = 0, coeff: int = 3) -> dict:
    """A (co)boundary built from random integer coefficients near ``center``."""
    import random
    rng = random.Random(seed)
    view = X if hasattr(X, "neighbors") else _LocalView(X)
    near = _ball_around(view, [center], radius)
    S = view.full_subcomplex(near)
    src = degree - 1 if mode == "cochain" else degree + 1
    cells = S.simplices(src)
    out: dict = {}
    for s in cells:
        a = rng.randint(-coeff, coeff)
        if not a:
            continue
        part = coboundary_of(X, s) if mode == "cochain" else boundary_of(s)
        for t, v in part.items():
            out[t] = out.get(t, 0) + a * v
    return {t: v for t, v in out.items() if v}
