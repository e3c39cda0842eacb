"""Combinatorial horoballs, cusped graphs and truncated cusped 2-complexes."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, UnsupportedError
from .graph import Graph
from .groups import (CyclicPeripheral, GroupSpec, PeripheralSpec, cayley_ball,
                     format_word, inverse, letter_key, normal_form, parse_word,
                     peripheral_cosets, peripheral_models)
from .homology import SimplicialComplex


@dataclass(frozen=True, order=True)
class DepthVertex:
    """A vertex of a cusped space.

    Depth 0 with an empty ``coset`` is the Cayley (or tree) part; deeper
    vertices name the horoball or strip they belong to via ``coset``.
    """

    depth: int
    coset: str
    base: object

    def label(self) -> str:
        return f"{self.depth}/{self.coset}/{self.base}"

    @classmethod
    def from_label(cls, text: str) -> "DepthVertex":
        d, c, b = text.split("/", 2)
        return cls(int(d), c, b)

    def __str__(self) -> str:
        return self.label()


def depth(v) -> int:
    return v.depth if isinstance(v, DepthVertex) else 0


# ---------------------------------------------------------------------------
# horoballs and cusped graphs


def _add_horoball(G: Graph, members: list, dist, T: int, coset: str,
                  bottom=lambda v: v) -> None:
    """Glue levels 1..T over ``members``; level 0 is ``bottom(member)``."""
    pairs = []
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            d = dist(members[a], members[b])
            if d > 0:
                pairs.append((d, members[a], members[b]))
    for n in range(T + 1):
        def at(v):
            return bottom(v) if n == 0 else DepthVertex(n, coset, v)
        for v in members:
            G.add_vertex(at(v), depth=n)
            if n > 0:
                below = bottom(v) if n == 1 else DepthVertex(n - 1, coset, v)
                G.add_edge(at(v), below, "vertical")
        reach = 2 ** n
        for d, v, w in pairs:
            if d <= reach:
                a, b = at(v), at(w)
                if n == 0 and G.has_edge(a, b):
                    continue  # already a Cayley edge
                G.add_edge(a, b, "horizontal")


def build_horoball(base: Graph, T: int) -> Graph:
    """Combinatorial horoball over a finite connected graph, levels 0..T."""
    if T < 0:
        raise InputError("T must be nonnegative")
    if len(base) == 0 or not base.is_connected():
        raise InputError("horoball base must be a nonempty connected graph")
    verts = base.vertices()
    dist = {v: base.bfs(v) for v in verts}
    G = Graph()
    _add_horoball(G, verts, lambda a, b: dist[a][b], T, "",
                  bottom=lambda v: DepthVertex(0, "", v))
    G.meta.update(T=T, kind="horoball")
    return G


def build_cusped_graph(spec: GroupSpec, per: PeripheralSpec, R: int, T: int) -> Graph:
    """Cayley ball of radius R with a depth-T horoball on every coset trace.

    Horizontal edges use the word metric of the peripheral subgroup on its
    own generators, computed from normal forms rather than the ball.
    """
    if R < 1 or T < 1:
        raise InputError("R and T must be at least 1")
    ball = cayley_ball(spec, R)
    G = Graph()
    tree = {v: DepthVertex(0, "", v) for v in ball.vertices()}
    for v, dv in tree.items():
        G.add_vertex(dv, depth=0, word=ball.data[v]["word"])
    for u, v in ball.edges():
        G.add_edge(tree[u], tree[v], "cayley")
    registry = {}
    disconnected = []
    if len(per):
        models = peripheral_models(spec, per)
        for tr in peripheral_cosets(spec, per, ball):
            model = models[tr.peripheral]
            members = sorted(tr.members)
            coords = tr.coords
            _add_horoball(G, members, lambda a, b: model.distance(coords[a], coords[b]),
                          T, tr.key, bottom=lambda v: tree[v])
            registry[tr.key] = tr
            if not tr.connected:
                disconnected.append(tr.key)
    if disconnected:
        warnings.warn(f"{len(disconnected)} coset traces are disconnected in the ball",
                      RuntimeWarning)
    G.meta.update(R=R, T=T, kind="cusped-graph", spec=spec, per=per,
                  registry=registry, disconnected=disconnected)
    return G


def horoball_top(G: Graph, key: str, base: str | None = None) -> DepthVertex:
    """Deepest vertex of the named horoball (over ``base`` or its coset rep)."""
    tr = G.meta["registry"].get(key)
    if tr is None:
        raise InputError(f"unknown coset {key!r}")
    b = tr.rep if base is None else base
    v = DepthVertex(G.meta["T"], key, b)
    if v not in G:
        raise InputError(f"vertex {v} not present")
    return v


# ---------------------------------------------------------------------------
# cusped 2-complexes for free groups with cyclic peripherals


class CuspedComplex:
    """Lazy truncated model of the universal cover of the open mapping cylinder.

    The underlying space is the Cayley tree of a free group with, for each
    left coset g<u> of a cyclic peripheral, a strip [0, T] x line glued along
    the axis g u^k u[:r]. Tree vertices have length <= R. Column i of a
    strip sits over the axis vertex with index i; each square is split by
    the diagonal (t, i)-(t+1, i+1).
    """

    def __init__(self, spec: GroupSpec, per: PeripheralSpec, R: int, T: int):
        if spec.kind != "free":
            raise UnsupportedError("unsupported classifying-complex shape: group must be free")
        if R < 1 or T < 1:
            raise InputError("R and T must be at least 1")
        self.spec, self.per, self.R, self.T = spec, per, R, T
        self.models = []
        self.loops = []
        for name, gens in per.subgroups:
            if len(gens) != 1:
                raise UnsupportedError(
                    f"unsupported classifying-complex shape: {name!r} is not cyclic")
            u = normal_form(spec, gens[0])
            if len(u) > 1 and u[0] == -u[-1]:
                raise UnsupportedError(
                    f"unsupported classifying-complex shape: {name!r} is not cyclically reduced")
            self.models.append(CyclicPeripheral(spec, (u,)))
            self.loops.append(u)
        self.letters = sorted(spec.letters(), key=letter_key)
        self.basepoint = DepthVertex(0, "", "e")
        self._words: dict[str, tuple] = {"e": ()}
        self._path: dict = {}
        self._index: dict = {}
        self._strips: dict = {}
        self._nbrs: dict = {}

    # -- bookkeeping -------------------------------------------------------

    @property
    def safe_radius(self) -> int:
        return min(self.R, self.T) - 2

    def word(self, label: str) -> tuple:
        w = self._words.get(label)
        if w is None:
            w = normal_form(self.spec, parse_word(self.spec, label))
            self._words[label] = w
        return w

    def _label(self, w: tuple) -> str:
        s = format_word(self.spec, w)
        self._words.setdefault(s, w)
        return s

    def _key_parts(self, key: str):
        p, rep = key.split(":", 1)
        return int(p), rep

    def path(self, key: str, i: int) -> tuple:
        """Axis vertex with index i of the strip ``key``."""
        got = self._path.get((key, i))
        if got is None:
            p, rep = self._key_parts(key)
            u = self.loops[p]
            k, r = divmod(i, len(u))
            got = normal_form(self.spec, self.word(rep) + self.models[p].power(k) + u[:r])
            self._path[(key, i)] = got
        return got

    def in_ball(self, key: str, i: int) -> bool:
        return len(self.path(key, i)) <= self.R

    def strips_at(self, label: str) -> list[tuple[str, int]]:
        """(strip key, column index) for every strip glued at a tree vertex."""
        got = self._strips.get(label)
        if got is not None:
            return got
        x = self.word(label)
        out = []
        for p, (u, model) in enumerate(zip(self.loops, self.models)):
            for r in range(len(u)):
                y = normal_form(self.spec, x + inverse(u[:r]))
                rep, coord = model.coset(y)
                key = f"{p}:{self._label(rep)}"
                i = coord * len(u) + r
                self._path.setdefault((key, i), x)
                if self.in_ball(key, i - 1) or self.in_ball(key, i + 1):
                    out.append((key, i))
        out.sort()
        self._strips[label] = out
        return out

    def vertex(self, t: int, key: str, i: int) -> DepthVertex:
        lab = self._label(self.path(key, i))
        if t == 0:
            return DepthVertex(0, "", lab)
        v = DepthVertex(t, key, lab)
        self._index[v] = i
        return v

    def column(self, v: DepthVertex) -> int:
        i = self._index.get(v)
        if i is None:
            for key, j in self.strips_at(v.base):
                if key == v.coset:
                    return j
            raise InputError(f"unknown strip vertex {v}")
        return i

    def depth(self, v: DepthVertex) -> int:
        return v.depth

    # -- local structure ---------------------------------------------------

    def neighbors(self, v: DepthVertex) -> list[DepthVertex]:
        got = self._nbrs.get(v)
        if got is not None:
            return got
        out = []
        if v.depth == 0:
            x = self.word(v.base)
            if len(x) > self.R:
                raise InputError(f"{v} lies outside the ball")
            for a in self.letters:
                y = normal_form(self.spec, x + (a,))
                if len(y) <= self.R:
                    out.append(DepthVertex(0, "", self._label(y)))
            for key, i in self.strips_at(v.base):
                out.append(self.vertex(1, key, i))
                if self.in_ball(key, i + 1):
                    out.append(self.vertex(1, key, i + 1))
        else:
            t, key, i = v.depth, v.coset, self.column(v)
            for j in (i - 1, i + 1):
                if self.in_ball(key, j):
                    out.append(self.vertex(t, key, j))
            out.append(self.vertex(t - 1, key, i))
            if self.in_ball(key, i - 1):
                out.append(self.vertex(t - 1, key, i - 1))
            if t < self.T:
                out.append(self.vertex(t + 1, key, i))
                if self.in_ball(key, i + 1):
                    out.append(self.vertex(t + 1, key, i + 1))
        out = sorted(set(out))
        self._nbrs[v] = out
        return out

    def _square_triangles(self, key: str, t: int, i: int) -> list[tuple]:
        out = []
        for (tt, ii) in ((t, i), (t, i - 1), (t - 1, i - 1)):
            if 0 <= tt < self.T and self.in_ball(key, ii) and self.in_ball(key, ii + 1):
                out.append((self.vertex(tt, key, ii), self.vertex(tt, key, ii + 1),
                            self.vertex(tt + 1, key, ii + 1)))
        for (tt, ii) in ((t, i), (t - 1, i), (t - 1, i - 1)):
            if 0 <= tt < self.T and self.in_ball(key, ii) and self.in_ball(key, ii + 1):
                out.append((self.vertex(tt, key, ii), self.vertex(tt + 1, key, ii),
                            self.vertex(tt + 1, key, ii + 1)))
        return out

    def triangles_at(self, v: DepthVertex) -> list[tuple]:
        if v.depth == 0:
            cells = []
            for key, i in self.strips_at(v.base):
                cells += self._square_triangles(key, 0, i)
        else:
            cells = self._square_triangles(v.coset, v.depth, self.column(v))
        return sorted({tuple(sorted(c)) for c in cells})

    # -- global views ------------------------------------------------------

    def levels(self, max_level: int | None = None) -> dict:
        """Combinatorial distance from the basepoint in the 1-skeleton."""
        dist = {self.basepoint: 0}
        frontier = [self.basepoint]
        while frontier:
            nxt = []
            for u in frontier:
                if max_level is not None and dist[u] >= max_level:
                    continue
                for w in self.neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def full_subcomplex(self, vertices: Iterable[DepthVertex]) -> SimplicialComplex:
        keep = set(vertices)
        X = SimplicialComplex()
        for v in keep:
            X.add((v,))
            for w in self.neighbors(v):
                if w in keep and v < w:
                    X.add((v, w))
            for tri in self.triangles_at(v):
                if tri[0] == v and all(w in keep for w in tri):
                    X.add(tri)
        return X

    def materialize(self) -> SimplicialComplex:
        return self.full_subcomplex(self.levels())

    def strip_keys(self) -> list[str]:
        return sorted({k for v in self.levels() if v.depth for k in [v.coset]})


def build_cusped_complex(spec: GroupSpec, per: PeripheralSpec, R: int, T: int) -> CuspedComplex:
    return CuspedComplex(spec, per, R, T)


# ---------------------------------------------------------------------------
# depth truncation

_MODES = {
    "<=": lambda d, j: d <= j, "≤": lambda d, j: d <= j,
    "<": lambda d, j: d < j,
    "=": lambda d, j: d == j, "==": lambda d, j: d == j,
    ">=": lambda d, j: d >= j, "≥": lambda d, j: d >= j,
    ">": lambda d, j: d > j,
}


def truncate_by_depth(X, j: int, mode: str = "<="):
    """Induced subgraph or full subcomplex on vertices whose depth passes."""
    if mode not in _MODES:
        raise InputError(f"unknown mode {mode!r}")
    test = _MODES[mode]
    if isinstance(X, CuspedComplex):
        if j > X.T:
            raise InputError("depth beyond the truncation")
        X = X.materialize()
    if isinstance(X, Graph):
        T = X.meta.get("T")
        if T is not None and j > T:
            raise InputError("depth beyond the truncation")
        return X.subgraph(v for v in X.vertices() if test(depth(v), j))
    if isinstance(X, SimplicialComplex):
        return X.full_subcomplex(v for v in X.vertices() if test(depth(v), j))
    raise InputError("unsupported object for truncation")


# ---------------------------------------------------------------------------
# simplex-list files


def export_simplex_list(X: SimplicialComplex) -> str:
    """One simplex per line, vertex labels separated by spaces."""
    lines = []
    for s in X.all_simplices():
        lines.append(" ".join(v.label() if isinstance(v, DepthVertex) else str(v) for v in s))
    return "\n".join(lines) + "\n"


def import_simplex_list(text: str) -> SimplicialComplex:
    X = SimplicialComplex()
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        verts = [DepthVertex.from_label(p) if "/" in p else _atom(p) for p in parts]
        X.add(verts)
    return X


def _atom(p: str):
    try:
        return int(p)
    except ValueError:
        return p


def import_edge_list(text: str) -> Graph:
    G = Graph()
    ids = {}
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "V":
            lab = parts[2]
            v = DepthVertex.from_label(lab) if "/" in lab else _atom(lab)
            ids[parts[1]] = v
            G.add_vertex(v, depth=int(parts[3]))
        elif parts[0] == "E":
            kind = parts[3] if len(parts) > 3 and parts[3] != "-" else None
            G.add_edge(ids[parts[1]], ids[parts[2]], kind)
        else:
            raise InputError(f"bad record {line!r}")
    return G
