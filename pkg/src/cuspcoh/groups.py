"""Group pairs with decidable normal forms, Cayley balls and coset traces.

Words are tuples of nonzero ints: ``i`` is the i-th generator (1-based)
and ``-i`` its inverse. Generators are printed as single letters
``a b c d f g ...`` (``e`` is reserved for the identity); inverses are the
upper-case letters.
"""
from __future__ import annotations

import re
import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InputError, ResourceError, UnsupportedError
from .graph import Graph
from .homology import hermite_normal_form

Word = tuple

LETTERS = "abcdfghijklmnopqrstuvwxyz"
KINDS = ("free", "free-abelian", "surface", "free-product")
DEFAULT_CAP = 200_000


# ---------------------------------------------------------------------------
# words


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def letter_key(x: int) -> tuple[int, int]:
    """Order a < A < b < B < ..."""
    return (abs(x), 0 if x > 0 else 1)


def word_key(w: Sequence[int]):
    return (len(w), [letter_key(x) for x in w])


_SUPERSCRIPT = str.maketrans("⁻⁰¹²³⁴⁵⁶⁷⁸⁹", "-0123456789")
_TOKEN = re.compile(r"\s*([A-Za-z])(?:\^\(?\s*(-?\d+)\s*\)?|([⁻⁰¹²³⁴⁵⁶⁷⁸⁹]+))?")


@dataclass(frozen=True)
class GroupSpec:
    """A group with a closed-form normal form.

    ``factors`` describes a free product as a tuple of (kind, rank) with
    kind "free" or "free-abelian"; generators are numbered consecutively
    across factors.
    """

    kind: str
    rank: int
    factors: tuple = ()
    names: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedError(f"no normal form available for kind {self.kind!r}")
        if self.kind == "surface" and self.rank < 2:
            raise UnsupportedError("surface groups need genus >= 2")
        if self.kind == "free-product":
            for k, r in self.factors:
                if k not in ("free", "free-abelian") or r < 1:
                    raise UnsupportedError(f"unsupported free factor {k}({r})")
        n = self.ngens
        if n > len(LETTERS):
            raise UnsupportedError("too many generators")
        if not self.names:
            object.__setattr__(self, "names", tuple(LETTERS[:n]))

    @classmethod
    def free(cls, rank: int) -> "GroupSpec":
        return cls("free", rank)

    @classmethod
    def free_abelian(cls, rank: int) -> "GroupSpec":
        return cls("free-abelian", rank)

    @classmethod
    def surface(cls, genus: int) -> "GroupSpec":
        return cls("surface", genus)

    @classmethod
    def free_product(cls, factors: Sequence[tuple[str, int]]) -> "GroupSpec":
        factors = tuple((k, int(r)) for k, r in factors)
        return cls("free-product", sum(r for _, r in factors), factors)

    @property
    def ngens(self) -> int:
        if self.kind == "surface":
            return 2 * self.rank
        return self.rank

    @property
    def relators(self) -> list[Word]:
        if self.kind == "surface":
            w: list[int] = []
            for i in range(self.rank):
                a, b = 2 * i + 1, 2 * i + 2
                w += [a, b, -a, -b]
            return [tuple(w)]
        if self.kind == "free-abelian":
            n = self.rank
            return [(i, j, -i, -j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if self.kind == "free-product":
            out = []
            for block in atomic_blocks(self):
                if len(block) > 1:
                    out += [(i, j, -i, -j) for i in block for j in block if i < j]
            return out
        return []

    def letters(self) -> list[int]:
        out = []
        for i in range(1, self.ngens + 1):
            out += [i, -i]
        return out

    def parse(self, text: str) -> Word:
        return parse_word(self, text)

    def format(self, w: Sequence[int]) -> str:
        return format_word(self, w)

    def describe(self) -> str:
        if self.kind == "free-product":
            inner = ", ".join(f"{k}({r})" for k, r in self.factors)
            return f"free-product[{inner}]"
        return f"{self.kind}({self.rank})"


def parse_word(spec: GroupSpec, text: str) -> Word:
    """Parse "a b A", "abAB", "a^-1 b^2" or "a⁻¹ b"."""
    s = text.strip()
    if s in ("", "e", "1"):
        return ()
    out: list[int] = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace() or s[pos] in "*·.":
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise InputError(f"malformed word {text!r} at position {pos}")
        ch, exp, sup = m.group(1), m.group(2), m.group(3)
        pos = m.end()
        if ch == "e" and exp is None and sup is None:
            continue
        lower = ch.lower()
        if lower not in spec.names:
            raise InputError(f"unknown generator {ch!r} in {text!r}")
        g = spec.names.index(lower) + 1
        if ch.isupper():
            g = -g
        power = 1
        if exp is not None:
            power = int(exp)
        elif sup is not None:
            power = int(sup.translate(_SUPERSCRIPT))
        out += [g if power > 0 else -g] * abs(power)
    return tuple(out)


def format_word(spec: GroupSpec, w: Sequence[int]) -> str:
    if not w:
        return "e"
    return "".join(spec.names[x - 1] if x > 0 else spec.names[-x - 1].upper() for x in w)


# ---------------------------------------------------------------------------
# normal forms


def atomic_blocks(spec: GroupSpec) -> list[tuple[int, ...]]:
    """Generator blocks that act as free-product factors of the normal form.

    A free factor of rank r splits into r infinite cyclic blocks; a
    free-abelian factor is one block.
    """
    if spec.kind == "free":
        return [(i,) for i in range(1, spec.rank + 1)]
    if spec.kind == "free-abelian":
        return [tuple(range(1, spec.rank + 1))]
    if spec.kind == "free-product":
        out, start = [], 1
        for kind, r in spec.factors:
            gens = tuple(range(start, start + r))
            out += [(g,) for g in gens] if kind == "free" else [gens]
            start += r
        return out
    raise UnsupportedError("no block structure for this kind")


def _block_of(spec: GroupSpec) -> dict[int, int]:
    return {g: b for b, block in enumerate(atomic_blocks(spec)) for g in block}


def _syllable_word(block: Sequence[int], vec: dict[int, int]) -> Word:
    out: list[int] = []
    for g in block:
        e = vec.get(g, 0)
        out += [g if e > 0 else -g] * abs(e)
    return tuple(out)


def _product_nf(spec: GroupSpec, w: Sequence[int]) -> Word:
    blocks = atomic_blocks(spec)
    owner = _block_of(spec)
    stack: list[list] = []  # [block index, exponent dict]
    for x in w:
        g = abs(x)
        if g not in owner:
            raise InputError(f"letter {x} not in alphabet")
        b = owner[g]
        if stack and stack[-1][0] == b:
            vec = stack[-1][1]
            vec[g] = vec.get(g, 0) + (1 if x > 0 else -1)
            if not vec[g]:
                del vec[g]
            if not vec:
                stack.pop()
        else:
            stack.append([b, {g: 1 if x > 0 else -1}])
    out: list[int] = []
    for b, vec in stack:
        out += _syllable_word(blocks[b], vec)
    return tuple(out)


def _check_letters(spec: GroupSpec, w: Sequence[int]) -> None:
    n = spec.ngens
    for x in w:
        if not isinstance(x, int) or x == 0 or abs(x) > n:
            raise InputError(f"letter {x!r} is not a declared generator")


def normal_form(spec: GroupSpec, w: Sequence[int] | str) -> Word:
    """Canonical representative of the element represented by ``w``."""
    if isinstance(w, str):
        w = parse_word(spec, w)
    w = tuple(w)
    _check_letters(spec, w)
    if spec.kind == "surface":
        return _surface(spec).normal_form(w)
    return _product_nf(spec, w)


def multiply(spec: GroupSpec, *words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        out += list(w)
    return normal_form(spec, tuple(out))


def word_length(spec: GroupSpec, w: Sequence[int]) -> int:
    """Word metric length; normal forms are geodesic for every kind."""
    return len(normal_form(spec, w))


class _SurfaceGroup:
    """Dehn's algorithm plus shortlex canonical forms for genus >= 2.

    The shortlex-least representative is found in a lazily grown
    breadth-first ball; equality between candidates is decided by Dehn's
    algorithm on the quotient word.
    """

    def __init__(self, spec: GroupSpec, cap: int = DEFAULT_CAP):
        self.spec = spec
        self.cap = cap
        r = spec.relators[0]
        self.rlen = len(r)
        half = self.rlen // 2
        self.rules: dict[Word, Word] = {}
        for base in (r, inverse(r)):
            for s in range(self.rlen):
                c = base[s:] + base[:s]
                for L in range(half + 1, self.rlen + 1):
                    self.rules.setdefault(c[:L], inverse(c[L:]))
        self.lengths = sorted({len(k) for k in self.rules}, reverse=True)
        self.reps: list[Word] = [()]
        self.frontier: list[Word] = [()]
        self.radius = 0
        self.buckets: dict[tuple, list[Word]] = {self._abel(()): [()]}

    def dehn(self, w: Sequence[int]) -> Word:
        w = list(free_reduce(w))
        changed = True
        while changed:
            changed = False
            for L in self.lengths:
                for i in range(0, len(w) - L + 1):
                    key = tuple(w[i:i + L])
                    rep = self.rules.get(key)
                    if rep is not None:
                        w = list(free_reduce(w[:i] + list(rep) + w[i + L:]))
                        changed = True
                        break
                if changed:
                    break
        return tuple(w)

    def is_identity(self, w: Sequence[int]) -> bool:
        return not self.dehn(w)

    def _abel(self, w: Sequence[int]) -> tuple:
        v = [0] * self.spec.ngens
        for x in w:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(v)

    def _find(self, w: Sequence[int]) -> Word | None:
        inv = inverse(w)
        for u in self.buckets.get(self._abel(w), ()):
            if self.is_identity(inv + tuple(u)):
                return u
        return None

    def _grow(self) -> None:
        letters = sorted(self.spec.letters(), key=letter_key)
        new: list[Word] = []
        for u in self.frontier:
            for x in letters:
                if u and u[-1] == -x:
                    continue
                w = u + (x,)
                if self._find(w) is None:
                    new.append(w)
                    self.buckets.setdefault(self._abel(w), []).append(w)
                    self.reps.append(w)
                    if len(self.reps) > self.cap:
                        raise ResourceError("surface ball exceeds the vertex cap")
        self.frontier = new
        self.radius += 1

    def normal_form(self, w: Sequence[int]) -> Word:
        d = self.dehn(w)
        while self.radius < len(d):
            self._grow()
        found = self._find(d)
        if found is None:  # pragma: no cover - Dehn output is never longer than geodesic bound
            raise RuntimeError("normal form search failed")
        return found


@lru_cache(maxsize=None)
def _surface(spec: GroupSpec) -> _SurfaceGroup:
    return _SurfaceGroup(spec)


# ---------------------------------------------------------------------------
# Cayley balls


def cayley_ball(spec: GroupSpec, radius: int, cap: int = DEFAULT_CAP) -> Graph:
    """Induced Cayley subgraph on elements of length <= radius.

    Vertices are normal-form strings; ``graph.data[v]["word"]`` holds the
    normal-form tuple.
    """
    if radius < 0:
        raise InputError("radius must be nonnegative")
    G = Graph()
    start: Word = ()
    seen = {start: 0}
    order = [start]
    queue = deque([start])
    letters = sorted(spec.letters(), key=letter_key)
    while queue:
        u = queue.popleft()
        if seen[u] == radius:
            continue
        for x in letters:
            w = normal_form(spec, u + (x,))
            if w not in seen:
                seen[w] = seen[u] + 1
                order.append(w)
                queue.append(w)
                if len(seen) > cap:
                    raise ResourceError(f"Cayley ball exceeds cap {cap}")
    for w in order:
        G.add_vertex(format_word(spec, w), word=w, length=seen[w])
    for w in order:
        if seen[w] == radius:
            continue
        a = format_word(spec, w)
        for x in letters:
            v = normal_form(spec, w + (x,))
            if v in seen:
                G.add_edge(a, format_word(spec, v), "cayley")
    G.meta["spec"] = spec
    G.meta["radius"] = radius
    return G


# ---------------------------------------------------------------------------
# peripheral structures


@dataclass(frozen=True)
class PeripheralSpec:
    subgroups: tuple = ()  # ((name, (Word, ...)), ...)

    @classmethod
    def parse(cls, spec: GroupSpec, entries: Sequence[tuple[str, Sequence[str]]]):
        subs = []
        for name, gens in entries:
            words = tuple(normal_form(spec, parse_word(spec, g)) for g in gens)
            if not words or any(not w for w in words):
                raise InputError(f"peripheral {name!r} needs nontrivial generators")
            subs.append((name, words))
        return cls(tuple(subs))

    def __len__(self) -> int:
        return len(self.subgroups)

    def names(self) -> list[str]:
        return [n for n, _ in self.subgroups]


@dataclass
class CosetTrace:
    """Members of one left coset gP inside a Cayley ball.

    ``coords`` maps each member label to its coordinate inside P (an int
    for cyclic subgroups, a word or vector otherwise); ``connected``
    records whether the members span a connected subgraph of the ball.
    """

    peripheral: int
    rep: str
    members: frozenset
    coords: dict = field(default_factory=dict)
    connected: bool = True

    @property
    def key(self) -> str:
        return f"{self.peripheral}:{self.rep}"


class Peripheral:
    """Membership, canonical coset representatives and the metric of P."""

    shape = "abstract"

    def __init__(self, spec: GroupSpec, gens: Sequence[Word]):
        self.spec = spec
        self.gens = [normal_form(spec, g) for g in gens]

    def coset(self, x: Word) -> tuple[Word, object]:
        """Canonical representative of xP and the coordinate of x in it."""
        raise NotImplementedError

    def distance(self, a, b) -> int:
        """Word metric of P between two coordinates."""
        raise NotImplementedError

    def element(self, coord) -> Word:
        raise NotImplementedError

    def contains(self, w: Word) -> bool:
        rep, _ = self.coset(normal_form(self.spec, w))
        return rep == ()


def _repr_key(spec: GroupSpec, w: Word):
    return (len(w), format_word(spec, w))


class CyclicPeripheral(Peripheral):
    """P = <u> inside a free group or free product."""

    shape = "cyclic"

    def __init__(self, spec: GroupSpec, gens: Sequence[Word]):
        super().__init__(spec, gens)
        if spec.kind == "surface":
            raise UnsupportedError("unsupported peripheral: cyclic subgroup of a surface group")
        self.u = self.gens[0]
        self.uinv = inverse(self.u)
        if not self.u:
            raise InputError("trivial peripheral generator")
        self._powers: dict[int, Word] = {0: ()}

    def power(self, k: int) -> Word:
        if k not in self._powers:
            step = 1 if k > 0 else -1
            prev = self.power(k - step)
            self._powers[k] = normal_form(self.spec, prev + (self.u if k > 0 else self.uinv))
        return self._powers[k]

    def _bound(self, n: int) -> int:
        # |u^k| grows without bound and is nondecreasing in |k|, so once
        # |u^k| > 2n the word x u^k is longer than x for |x| = n.
        k = 1
        while len(self.power(k)) <= 2 * n or len(self.power(-k)) <= 2 * n:
            k += 1
        return k

    def coset(self, x: Word):
        K = self._bound(len(x))
        best = None
        for k in range(-K, K + 1):
            w = normal_form(self.spec, x + self.power(k))
            key = _repr_key(self.spec, w)
            if best is None or key < best[0]:
                best = (key, w, k)
        # x = rep * u^(-k)
        return best[1], -best[2]

    def distance(self, a: int, b: int) -> int:
        return abs(a - b)

    def element(self, coord: int) -> Word:
        return self.power(coord)


class FactorPeripheral(Peripheral):
    """P generated by whole atomic factors of a free product (or free group)."""

    shape = "factor"

    def __init__(self, spec: GroupSpec, gens: Sequence[Word]):
        super().__init__(spec, gens)
        letters = {abs(g[0]) for g in self.gens if len(g) == 1}
        if len(letters) != len(self.gens):
            raise UnsupportedError("unsupported peripheral: factor generators must be letters")
        blocks = [set(b) for b in atomic_blocks(spec)]
        for b in blocks:
            if b & letters and not b <= letters:
                raise UnsupportedError("unsupported peripheral: partial abelian factor")
        self.letters = letters

    def coset(self, x: Word):
        i = len(x)
        while i > 0 and abs(x[i - 1]) in self.letters:
            i -= 1
        return x[:i], x[i:]

    def distance(self, a: Word, b: Word) -> int:
        return len(normal_form(self.spec, inverse(a) + tuple(b)))

    def element(self, coord: Word) -> Word:
        return tuple(coord)


class LatticePeripheral(Peripheral):
    """P a subgroup of a free-abelian group spanned by independent vectors."""

    shape = "lattice"

    def __init__(self, spec: GroupSpec, gens: Sequence[Word]):
        super().__init__(spec, gens)
        n = spec.rank
        self.vectors = [self._vec(g) for g in self.gens]
        self.hnf = hermite_normal_form(self.vectors, n)
        if len(self.hnf) != len(self.vectors):
            raise UnsupportedError("unsupported peripheral: dependent lattice generators")

    def _vec(self, w: Word) -> list[int]:
        v = [0] * self.spec.rank
        for x in w:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return v

    def _word(self, v: Sequence[int]) -> Word:
        return _syllable_word(range(1, self.spec.rank + 1),
                              {i + 1: e for i, e in enumerate(v) if e})

    def coset(self, x: Word):
        v = self._vec(x)
        r = list(v)
        for row in self.hnf:
            c = next(i for i, a in enumerate(row) if a)
            q = r[c] // row[c]
            r = [a - q * b for a, b in zip(r, row)]
        diff = [a - b for a, b in zip(v, r)]
        return self._word(r), tuple(self._solve(diff))

    def _solve(self, diff: Sequence[int]) -> list[int]:
        from .homology import SparseMatrix
        A = SparseMatrix.from_dense([[vec[i] for vec in self.vectors]
                                     for i in range(self.spec.rank)])
        sol = A.solve(list(diff))
        if sol is None:  # pragma: no cover - diff lies in the lattice by construction
            raise RuntimeError("lattice coordinate solve failed")
        return sol

    def distance(self, a, b) -> int:
        return sum(abs(x - y) for x, y in zip(a, b))

    def element(self, coord) -> Word:
        v = [sum(c * vec[i] for c, vec in zip(coord, self.vectors))
             for i in range(self.spec.rank)]
        return self._word(v)


def make_peripheral(spec: GroupSpec, gens: Sequence[Word]) -> Peripheral:
    gens = [normal_form(spec, g) for g in gens]
    if spec.kind == "free-abelian":
        return LatticePeripheral(spec, gens)
    if spec.kind == "surface":
        raise UnsupportedError("unsupported peripheral: surface groups carry no peripheral model")
    if all(len(g) == 1 for g in gens):
        try:
            return FactorPeripheral(spec, gens)
        except UnsupportedError:
            if len(gens) != 1:
                raise
    if len(gens) == 1:
        return CyclicPeripheral(spec, gens)
    raise UnsupportedError("unsupported peripheral: neither cyclic nor a union of factors")


def peripheral_models(spec: GroupSpec, per: PeripheralSpec) -> list[Peripheral]:
    return [make_peripheral(spec, gens) for _, gens in per.subgroups]


def peripheral_cosets(spec: GroupSpec, per: PeripheralSpec, ball: Graph) -> list[CosetTrace]:
    """Partition the ball into coset traces, one family per peripheral."""
    traces: list[CosetTrace] = []
    words = {v: ball.data[v]["word"] for v in ball.vertices()}
    for idx, model in enumerate(peripheral_models(spec, per)):
        groups: dict[Word, dict] = {}
        for v, w in words.items():
            rep, coord = model.coset(w)
            groups.setdefault(rep, {})[v] = coord
        for rep in sorted(groups, key=lambda r: _repr_key(spec, r)):
            members = groups[rep]
            tr = CosetTrace(idx, format_word(spec, rep), frozenset(members), dict(members))
            tr.connected = ball.subgraph(members).is_connected()
            traces.append(tr)
        if len(groups) == 1 and len(words) > 1:
            raise InputError(f"peripheral {per.subgroups[idx][0]!r} is not proper at ball scale")
    return traces


# ---------------------------------------------------------------------------
# induced peripheral structure on finite-index subgroups


@dataclass(frozen=True)
class FiniteQuotient:
    """Right action of G on points 0..m-1 given by generator permutations.

    The subgroup H is the stabilizer of point 0.
    """

    perms: tuple  # perms[i][p] = image of p under generator i+1

    def act(self, point: int, w: Sequence[int]) -> int:
        for x in w:
            p = self.perms[abs(x) - 1]
            if x > 0:
                point = p[point]
            else:
                point = p.index(point)
        return point

    def contains(self, w: Sequence[int]) -> bool:
        return self.act(0, w) == 0

    @property
    def size(self) -> int:
        return len(self.perms[0]) if self.perms else 1


@dataclass
class InducedPeripheral:
    parent: int
    double_coset_rep: Word
    generators: tuple


def induced_peripheral(spec: GroupSpec, quotient: FiniteQuotient, per: PeripheralSpec,
                       radius: int = 6) -> list[InducedPeripheral]:
    """Generators of H ∩ dPd⁻¹ for each double coset HdP.

    Double cosets are P-orbits on the points reachable from 0. Transversal
    words come from a breadth-first search over the action, bounded by
    ``radius``; unreachable points trigger a warning.
    """
    if len(quotient.perms) != spec.ngens:
        raise InputError("quotient needs one permutation per generator")
    letters = sorted(spec.letters(), key=letter_key)
    transversal = {0: ()}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        if len(transversal[p]) >= radius:
            continue
        for x in letters:
            q = quotient.act(p, (x,))
            if q not in transversal:
                transversal[q] = transversal[p] + (x,)
                queue.append(q)
    if len(transversal) < quotient.size:
        reach = _reachable(quotient)
        if len(reach) > len(transversal):
            warnings.warn("double coset enumeration incomplete at this radius", RuntimeWarning)
    out: list[InducedPeripheral] = []
    for idx, (_, gens) in enumerate(per.subgroups):
        gens = [normal_form(spec, g) for g in gens]
        seen: set[int] = set()
        for start in sorted(transversal):
            if start in seen:
                continue
            orbit = {start: ()}
            q2 = deque([start])
            while q2:
                p = q2.popleft()
                for g in gens:
                    for h in (g, inverse(g)):
                        t = quotient.act(p, h)
                        if t not in orbit:
                            orbit[t] = orbit[p] + h
                            q2.append(t)
            seen |= set(orbit)
            d = transversal[start]
            stab: list[Word] = []
            for p, tp in orbit.items():
                for g in gens:
                    t = quotient.act(p, g)
                    s = normal_form(spec, tp + g + inverse(orbit[t]))
                    if s and s not in stab and inverse(s) not in stab:
                        stab.append(s)
            conj = sorted({normal_form(spec, d + s + inverse(d)) for s in stab},
                          key=lambda w: _repr_key(spec, w))
            out.append(InducedPeripheral(idx, d, tuple(conj)))
    return out


def _reachable(quotient: FiniteQuotient) -> set[int]:
    seen = {0}
    stack = [0]
    while stack:
        p = stack.pop()
        for perm in quotient.perms:
            for q in (perm[p], perm.index(p)):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return seen


# ---------------------------------------------------------------------------
# export


def export_edge_list(G: Graph) -> str:
    """Vertex table followed by sorted edges, one record per line."""
    lines = []
    order = G.vertices()
    ids = {v: i for i, v in enumerate(order)}
    for v in order:
        depth = G.data[v].get("depth", 0)
        lines.append(f"V {ids[v]} {_label(v)} {depth}")
    for u, v in G.edges():
        lines.append(f"E {ids[u]} {ids[v]} {G.edge_kind.get((u, v), '-')}")
    return "\n".join(lines) + "\n"


def _label(v) -> str:
    if hasattr(v, "label"):
        return v.label()
    return str(v)
