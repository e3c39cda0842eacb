"""Exact integer (co)homology of finite simplicial complexes and pairs.

Everything is computed over the integers with Python ints, so there is no
overflow. Large sparse boundary matrices are first reduced by eliminating
unit pivots; whatever is left goes through a dense Smith normal form.
"""
from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import InputError

Simplex = tuple
Matrix = list  # list of rows of ints


# ---------------------------------------------------------------------------
# dense integer linear algebra


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * ncols
        for k in range(inner):
            a = row[k]
            if a:
                bk = B[k]
                for j in range(ncols):
                    if bk[j]:
                        acc[j] += a * bk[j]
        out.append(acc)
    return out


def transpose(A: Matrix, ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def determinant(A: Matrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(map(int, r)) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SmithForm:
    """Result of :func:`smith_normal_form` with ``U @ A @ V == S``."""

    S: Matrix
    U: Matrix
    V: Matrix
    Uinv: Matrix | None = None
    Vinv: Matrix | None = None

    @property
    def diagonal(self) -> list[int]:
        out = []
        for i in range(min(len(self.S), len(self.S[0]) if self.S else 0)):
            if self.S[i][i] == 0:
                break
            out.append(self.S[i][i])
        return out

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(A, inverses: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix.

    Pivots are chosen by smallest absolute value, ties broken by position.
    With ``inverses`` the inverse transforms are tracked as well.
    """
    S = [[int(x) for x in row] for row in A]
    m = len(S)
    n = len(S[0]) if m else 0
    U, V = identity(m), identity(n)
    Ui = identity(m) if inverses else None
    Vi = identity(n) if inverses else None

    def row_add(i, j, k):  # row i += k * row j
        if not k:
            return
        Si, Sj = S[i], S[j]
        for c in range(n):
            if Sj[c]:
                Si[c] += k * Sj[c]
        Ui_, Uj = U[i], U[j]
        for c in range(m):
            if Uj[c]:
                Ui_[c] += k * Uj[c]
        if Ui is not None:
            for r in range(m):
                if Ui[r][i]:
                    Ui[r][j] -= k * Ui[r][i]

    def col_add(i, j, k):  # col i += k * col j
        if not k:
            return
        for r in range(m):
            if S[r][j]:
                S[r][i] += k * S[r][j]
        for r in range(n):
            if V[r][j]:
                V[r][i] += k * V[r][j]
        if Vi is not None:
            Vj, Vii = Vi[j], Vi[i]
            for c in range(n):
                if Vii[c]:
                    Vj[c] -= k * Vii[c]

    def row_swap(i, j):
        if i == j:
            return
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        if Ui is not None:
            for r in range(m):
                Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def col_swap(i, j):
        if i == j:
            return
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        if Vi is not None:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_neg(i):
        S[i] = [-x for x in S[i]]
        U[i] = [-x for x in U[i]]
        if Ui is not None:
            for r in range(m):
                Ui[r][i] = -Ui[r][i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = S[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    row_add(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    col_add(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t to the pivot
                cand = [(abs(S[i][t]), 0, i) for i in range(t + 1, m) if S[i][t]]
                cand += [(abs(S[t][j]), 1, j) for j in range(t + 1, n) if S[t][j]]
                _, kind, idx = min(cand)
                if kind == 0:
                    row_swap(t, idx)
                else:
                    col_swap(t, idx)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if S[t][t] < 0:
            row_neg(t)
        t += 1
    return SmithForm(S, U, V, Ui, Vi)


def hermite_normal_form(rows: Iterable[Sequence[int]], ncols: int) -> Matrix:
    """Canonical row Hermite normal form of the lattice spanned by ``rows``."""
    A = [[int(x) for x in r] for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        if r >= len(A):
            break
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(A[i][c]), i))
            A[r], A[piv] = A[piv], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r >= len(A) or A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return [row for row in A[:r]]


def same_lattice(rows_a, rows_b, ncols: int) -> bool:
    return hermite_normal_form(rows_a, ncols) == hermite_normal_form(rows_b, ncols)


def integer_kernel(A: Matrix, ncols: int) -> Matrix:
    """Basis (as rows) of the integer kernel {x : A x = 0}."""
    if not A:
        return identity(ncols)
    snf = smith_normal_form(A)
    r = snf.rank
    return [[snf.V[i][j] for i in range(ncols)] for j in range(r, ncols)]


# ---------------------------------------------------------------------------
# sparse matrices and unit-pivot elimination


@dataclass
class _Reduction:
    pivots: list  # (row, col, p, row dict at pivot time, rhs at pivot time)
    residual_rows: list
    residual_cols: list
    residual: SmithForm | None
    rows: list
    rhs: list | None

    @property
    def rank(self) -> int:
        return len(self.pivots) + (self.residual.rank if self.residual else 0)

    def factors(self) -> list[int]:
        out = [1] * len(self.pivots)
        if self.residual:
            out += self.residual.diagonal
        return sorted(out)


def _eliminate(rows: list, ncols: int, rhs: list | None = None,
               transforms: bool = False) -> _Reduction:
    rows = [dict(r) for r in rows]
    b = list(rhs) if rhs is not None else None
    cols = defaultdict(set)
    for i, r in enumerate(rows):
        for c in r:
            cols[c].add(i)
    alive = set(range(len(rows)))
    heap = [(len(r), i) for i, r in enumerate(rows) if r]
    heapq.heapify(heap)
    pivots = []
    while heap:
        ln, i = heapq.heappop(heap)
        if i not in alive or len(rows[i]) != ln:
            continue
        r = rows[i]
        best = None
        for c, v in r.items():
            if v == 1 or v == -1:
                key = (len(cols[c]), c)
                if best is None or key < best:
                    best = key
        if best is None:
            continue
        c = best[1]
        p = r[c]
        bi = b[i] if b is not None else 0
        for j in sorted(cols[c]):
            if j == i:
                continue
            rj = rows[j]
            f = rj[c] * p
            for cc, v in r.items():
                nv = rj.get(cc, 0) - f * v
                if nv:
                    rj[cc] = nv
                    cols[cc].add(j)
                else:
                    rj.pop(cc, None)
                    cols[cc].discard(j)
            if b is not None:
                b[j] -= f * bi
            heapq.heappush(heap, (len(rj), j))
        alive.discard(i)
        for cc in r:
            cols[cc].discard(i)
        pivots.append((i, c, p, r, bi))
    res_rows = sorted(i for i in alive if rows[i])
    res_cols = sorted({c for i in res_rows for c in rows[i]})
    residual = None
    if res_rows:
        cpos = {c: k for k, c in enumerate(res_cols)}
        dense = [[0] * len(res_cols) for _ in res_rows]
        for k, i in enumerate(res_rows):
            for c, v in rows[i].items():
                dense[k][cpos[c]] = v
        residual = smith_normal_form(dense) if transforms else _snf_plain(dense)
    return _Reduction(pivots, res_rows, res_cols, residual, rows, b)


def _snf_plain(dense: Matrix) -> SmithForm:
    """Diagonal only; transforms are left as empty placeholders."""
    S = _diag_only(dense)
    return SmithForm(S, [], [])


def _diag_only(A: Matrix) -> Matrix:
    # Same algorithm as smith_normal_form without tracking transforms.
    S = [list(r) for r in A]
    m = len(S)
    n = len(S[0]) if m else 0
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Si = S[i]
            for j in range(t, n):
                v = Si[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        S[t], S[bi] = S[bi], S[t]
        if bj != t:
            for r in S:
                r[t], r[bj] = r[bj], r[t]
        while True:
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // p
                    St = S[t]
                    S[i] = [a - q * b for a, b in zip(S[i], St)]
                    if S[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // p
                    for r in S:
                        if r[t]:
                            r[j] -= q * r[t]
                    if S[t][j]:
                        clean = False
            if not clean:
                cand = [(abs(S[i][t]), 0, i) for i in range(t + 1, m) if S[i][t]]
                cand += [(abs(S[t][j]), 1, j) for j in range(t + 1, n) if S[t][j]]
                _, kind, idx = min(cand)
                if kind == 0:
                    S[t], S[idx] = S[idx], S[t]
                else:
                    for r in S:
                        r[t], r[idx] = r[idx], r[t]
                continue
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            S[t] = [a + b for a, b in zip(S[t], S[bad])]
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
        t += 1
    return S


class SparseMatrix:
    """Integer matrix stored as a list of row dictionaries."""

    def __init__(self, nrows: int, ncols: int, rows: list | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        self._reduction = None

    @classmethod
    def from_dense(cls, A) -> "SparseMatrix":
        A = [[int(x) for x in r] for r in A]
        ncols = len(A[0]) if A else 0
        return cls(len(A), ncols, [{j: v for j, v in enumerate(r) if v} for r in A])

    @classmethod
    def from_triplets(cls, nrows, ncols, triplets) -> "SparseMatrix":
        M = cls(nrows, ncols)
        for i, j, v in triplets:
            if v:
                M.rows[i][j] = M.rows[i].get(j, 0) + v
        return M

    def triplets(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for i, r in enumerate(self.rows) for j, v in sorted(r.items())]

    def to_dense(self) -> Matrix:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        T = SparseMatrix(self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                T.rows[j][i] = v
        return T

    def select_rows(self, idx: Sequence[int]) -> "SparseMatrix":
        return SparseMatrix(len(idx), self.ncols, [dict(self.rows[i]) for i in idx])

    def select_cols(self, idx: Sequence[int]) -> "SparseMatrix":
        pos = {c: k for k, c in enumerate(idx)}
        rows = [{pos[c]: v for c, v in r.items() if c in pos} for r in self.rows]
        return SparseMatrix(self.nrows, len(idx), rows)

    def matvec(self, x: Sequence[int]) -> list[int]:
        return [sum(v * x[j] for j, v in r.items()) for r in self.rows]

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise InputError("shape mismatch")
        out = SparseMatrix(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc = defaultdict(int)
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    acc[j] += a * b
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def is_zero(self) -> bool:
        return not any(self.rows)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def _reduce(self) -> _Reduction:
        if self._reduction is None:
            self._reduction = _eliminate(self.rows, self.ncols)
        return self._reduction

    def rank(self) -> int:
        return self._reduce().rank

    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries of the Smith form, ascending."""
        return self._reduce().factors()

    def solve(self, b: Sequence[int]) -> list[int] | None:
        """An integer solution of ``self @ x == b`` or None."""
        if len(b) != self.nrows:
            raise InputError("right-hand side has wrong length")
        red = _eliminate(self.rows, self.ncols, rhs=list(b), transforms=True)
        x = [0] * self.ncols
        rhs = red.rhs
        pivot_rows = {p[0] for p in red.pivots}
        for i in range(self.nrows):
            if not red.rows[i] and i not in pivot_rows and rhs[i]:
                return None
        if red.residual is not None:
            snf = red.residual
            bb = [rhs[i] for i in red.residual_rows]
            ub = [sum(u * v for u, v in zip(row, bb)) for row in snf.U]
            diag = snf.diagonal
            z = [0] * len(red.residual_cols)
            for k, val in enumerate(ub):
                if k < len(diag):
                    if val % diag[k]:
                        return None
                    z[k] = val // diag[k]
                elif val:
                    return None
            for k, c in enumerate(red.residual_cols):
                x[c] = sum(snf.V[k][t] * z[t] for t in range(len(z)))
        for i, c, p, row, bi in reversed(red.pivots):
            s = bi - sum(v * x[cc] for cc, v in row.items() if cc != c)
            x[c] = p * s
        return x


# ---------------------------------------------------------------------------
# simplicial complexes


class SimplicialComplex:
    """Finite simplicial complex; simplices are sorted vertex tuples.

    Vertex labels must be mutually comparable so that the sorted order,
    and therefore the orientation of each simplex, is well defined.
    """

    def __init__(self, simplices: Iterable[Sequence[Hashable]] = ()):
        self._cells: list[set] = []
        self._sorted: dict[int, list] = {}
        self._index: dict[int, dict] = {}
        for s in simplices:
            self.add(s)

    def add(self, simplex: Sequence[Hashable]) -> None:
        s = tuple(sorted(set(simplex)))
        if not s:
            return
        d = len(s) - 1
        while len(self._cells) <= d:
            self._cells.append(set())
        if s in self._cells[d]:
            return
        self._sorted.clear()
        self._index.clear()
        for k in range(d + 1):
            cell = self._cells[k]
            for face in combinations(s, k + 1):
                cell.add(face)

    @property
    def dim(self) -> int:
        return len(self._cells) - 1

    def simplices(self, k: int) -> list[Simplex]:
        if k < 0 or k >= len(self._cells):
            return []
        if k not in self._sorted:
            self._sorted[k] = sorted(self._cells[k])
        return self._sorted[k]

    def index(self, k: int) -> dict:
        if k not in self._index:
            self._index[k] = {s: i for i, s in enumerate(self.simplices(k))}
        return self._index[k]

    def count(self, k: int) -> int:
        return len(self._cells[k]) if 0 <= k < len(self._cells) else 0

    def counts(self) -> list[int]:
        return [len(c) for c in self._cells]

    def all_simplices(self) -> list[Simplex]:
        return [s for k in range(len(self._cells)) for s in self.simplices(k)]

    def vertices(self) -> list:
        return [s[0] for s in self.simplices(0)]

    def __contains__(self, simplex) -> bool:
        s = tuple(sorted(simplex))
        d = len(s) - 1
        return 0 <= d < len(self._cells) and s in self._cells[d]

    def __len__(self) -> int:
        return sum(len(c) for c in self._cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        a = [c for c in self._cells if c]
        b = [c for c in other._cells if c]
        return a == b

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(c) for k, c in enumerate(self._cells))

    def boundary_matrix(self, k: int) -> SparseMatrix:
        """Matrix of the boundary C_k -> C_{k-1}; zero rows when k = 0."""
        cols = self.simplices(k)
        if k == 0:
            return SparseMatrix(0, len(cols))
        rows_idx = self.index(k - 1)
        M = SparseMatrix(len(rows_idx), len(cols))
        for j, s in enumerate(cols):
            for pos in range(len(s)):
                face = s[:pos] + s[pos + 1:]
                M.rows[rows_idx[face]][j] = -1 if pos % 2 else 1
        return M

    def full_subcomplex(self, vertices: Iterable) -> "SimplicialComplex":
        keep = set(vertices)
        sub = SimplicialComplex()
        for k in range(len(self._cells)):
            cells = {s for s in self._cells[k] if all(v in keep for v in s)}
            if cells:
                sub._cells.append(cells)
            else:
                break
        return sub

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(s in other for c in self._cells for s in c)

    def skeleton(self, k: int) -> "SimplicialComplex":
        sub = SimplicialComplex()
        sub._cells = [set(c) for c in self._cells[: k + 1]]
        return sub


# ---------------------------------------------------------------------------
# abelian groups and chain complexes


@dataclass(frozen=True)
class AbelianGroup:
    """ℤ^rank plus ⊕ ℤ/d for the torsion divisors d1 | d2 | ..."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d <= 1 for d in t):
            raise InputError("torsion divisors must exceed 1")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise InputError("torsion divisors must form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_factors(cls, rank: int, factors: Iterable[int]) -> "AbelianGroup":
        return cls(rank, tuple(sorted(d for d in factors if d > 1)))

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        head, _, tail = text.partition(";")
        tors = tuple(int(t) for t in tail.replace(" ", "").split(",") if t)
        return cls(int(head), tors)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    def __str__(self) -> str:
        return f"{self.rank}; {','.join(map(str, self.torsion))}".rstrip()


ZERO = AbelianGroup()


@dataclass
class ChainComplex:
    """Free graded module with differentials.

    ``maps[k]`` is the differential leaving degree k. For a chain complex
    (step -1) it has rows indexed by ``bases[k-1]``; for a cochain complex
    (step +1) by ``bases[k+1]``. Missing entries are zero maps.
    """

    bases: dict
    maps: dict
    step: int = -1

    def degrees(self) -> list[int]:
        return sorted(self.bases)

    def size(self, k: int) -> int:
        return len(self.bases.get(k, ()))

    def out_map(self, k: int) -> SparseMatrix:
        M = self.maps.get(k)
        if M is None:
            return SparseMatrix(self.size(k + self.step), self.size(k))
        return M

    def in_map(self, k: int) -> SparseMatrix:
        return self.out_map(k - self.step)

    def homology(self, k: int) -> AbelianGroup:
        n = self.size(k)
        out_r = self.out_map(k).rank()
        inc = self.in_map(k)
        return AbelianGroup.from_factors(n - out_r - inc.rank(), inc.invariant_factors())

    def dual(self) -> "ChainComplex":
        maps = {}
        for k, M in self.maps.items():
            maps[k + self.step] = M.transpose()
        return ChainComplex(dict(self.bases), maps, -self.step)

    def check_square_zero(self) -> bool:
        for k in self.degrees():
            a = self.out_map(k)
            b = self.out_map(k + self.step)
            if a.nrows and b.ncols and a.ncols and not (b @ a).is_zero():
                return False
        return True


def chain_complex(X: SimplicialComplex) -> ChainComplex:
    bases = {k: X.simplices(k) for k in range(X.dim + 1)}
    maps = {k: X.boundary_matrix(k) for k in range(1, X.dim + 1)}
    return ChainComplex(bases, maps, -1)


def cochain_complex(X: SimplicialComplex) -> ChainComplex:
    return chain_complex(X).dual()


def homology(C: ChainComplex | SimplicialComplex, k: int) -> AbelianGroup:
    if isinstance(C, SimplicialComplex):
        C = chain_complex(C)
    return C.homology(k)


def cohomology(C: ChainComplex | SimplicialComplex, k: int) -> AbelianGroup:
    if isinstance(C, SimplicialComplex):
        C = chain_complex(C)
    if C.step < 0:
        C = C.dual()
    return C.homology(k)


def betti_numbers(X: SimplicialComplex) -> list[int]:
    C = chain_complex(X)
    return [C.homology(k).rank for k in range(X.dim + 1)]


def cochain_complex_on(cells: dict, top: int | None = None) -> ChainComplex:
    """Cochain complex on an upward-closed family of simplices.

    ``cells[k]`` lists k-simplices. The family must contain every coface
    (inside the ambient complex) of each member; then the coboundary only
    needs faces that are themselves members.
    """
    degrees = sorted(k for k in cells)
    bases = {k: sorted(cells[k]) for k in degrees}
    index = {k: {s: i for i, s in enumerate(bases[k])} for k in degrees}
    maps = {}
    for k in degrees:
        if k + 1 not in bases:
            continue
        idx = index[k]
        M = SparseMatrix(len(bases[k + 1]), len(bases[k]))
        for i, s in enumerate(bases[k + 1]):
            row = M.rows[i]
            for pos in range(len(s)):
                j = idx.get(s[:pos] + s[pos + 1:])
                if j is not None:
                    row[j] = -1 if pos % 2 else 1
        maps[k] = M
    return ChainComplex(bases, maps, +1)


def relative_cochain_complex(X: SimplicialComplex, F: SimplicialComplex) -> ChainComplex:
    """Cochains of X vanishing on F; its cohomology is H_c of X minus F."""
    if not F.is_subcomplex_of(X):
        raise InputError("F is not a subcomplex of X")
    cells = {k: [s for s in X.simplices(k) if s not in F] for k in range(X.dim + 1)}
    return cochain_complex_on(cells)


# ---------------------------------------------------------------------------
# explicit cohomology classes and induced maps


def _dense(M: SparseMatrix) -> Matrix:
    return M.to_dense()


def _apply(M: Matrix, x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in M]


class CohomologyClasses:
    """Generators and coordinates for H^k of a (co)chain complex.

    Coordinates list torsion generators first (reduced mod their order),
    then free generators. Intended for small complexes: uses dense SNF.
    """

    def __init__(self, C: ChainComplex, k: int):
        self.k = k
        self.basis = list(C.bases.get(k, ()))
        n = len(self.basis)
        self.n = n
        D1 = _dense(C.out_map(k)) if C.out_map(k).nrows else []
        D0 = _dense(C.in_map(k))
        if D1:
            s1 = smith_normal_form(D1, inverses=True)
            r = s1.rank
            V1, V1inv = s1.V, s1.Vinv
        else:
            r = 0
            V1 = V1inv = identity(n)
        self._r = r
        self._V1inv = V1inv
        self.kernel = [[V1[i][j] for i in range(n)] for j in range(r, n)]  # rows
        kdim = n - r
        ncols0 = len(D0[0]) if D0 else 0
        if D0 and ncols0:
            M = matmul(V1inv, D0)[r:]
        else:
            M = [[0] * 0 for _ in range(kdim)]
        if kdim and M and M[0]:
            s2 = smith_normal_form(M, inverses=True)
            U2, U2inv, diag = s2.U, s2.Uinv, s2.diagonal
        else:
            U2 = U2inv = identity(kdim)
            diag = []
        self._U2 = U2
        order = [i for i, d in enumerate(diag) if d > 1] + list(range(len(diag), kdim))
        self._order = order
        self.orders = [diag[i] if i < len(diag) else 0 for i in order]
        self.group = AbelianGroup.from_factors(kdim - len(diag), diag)
        self.generators = []
        for i in order:
            z = [U2inv[a][i] for a in range(kdim)]
            x = [sum(self.kernel[t][a] * z[t] for t in range(kdim)) for a in range(n)]
            self.generators.append(x)

    def coordinates(self, x: Sequence[int]) -> list[int]:
        """Class of a cocycle x in the generator coordinates."""
        if len(x) != self.n:
            raise InputError("cochain has wrong length")
        z_full = _apply(self._V1inv, x) if self.n else []
        if any(z_full[: self._r]):
            raise InputError("not a cocycle")
        z = z_full[self._r:]
        y = _apply(self._U2, z)
        out = []
        for i, d in zip(self._order, self.orders):
            out.append(y[i] % d if d else y[i])
        return out


@dataclass
class InducedMap:
    source: AbelianGroup
    target: AbelianGroup
    matrix: Matrix = field(default_factory=list)

    def rank(self) -> int:
        """Rank over the rationals (free part only)."""
        t = len(self.target.torsion)
        s = len(self.source.torsion)
        free = [row[s:] for row in self.matrix[t:]]
        if not free or not free[0]:
            return 0
        return SparseMatrix.from_dense(free).rank()

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def compose(self, after: "InducedMap") -> "InducedMap":
        M = matmul(after.matrix, self.matrix) if after.matrix and self.matrix else \
            [[0] * self.source.ngens for _ in range(after.target.ngens)]
        return InducedMap(self.source, after.target, _reduce_rows(M, after.target))


def _reduce_rows(M: Matrix, target: AbelianGroup) -> Matrix:
    out = [list(r) for r in M]
    for i, d in enumerate(target.torsion):
        out[i] = [v % d for v in out[i]]
    return out


def map_classes(src: CohomologyClasses, dst: CohomologyClasses, chain_map) -> InducedMap:
    """Matrix of the map on cohomology induced by a cochain map.

    ``chain_map`` takes a cochain (list over ``src.basis``) to a cochain
    over ``dst.basis``.
    """
    cols = [dst.coordinates(chain_map(g)) for g in src.generators]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(dst.group.ngens)]
    return InducedMap(src.group, dst.group, _reduce_rows(rows, dst.group))


def extension_by_zero(src_basis: Sequence, dst_basis: Sequence):
    pos = {s: i for i, s in enumerate(dst_basis)}
    idx = []
    for s in src_basis:
        if s not in pos:
            raise InputError(f"simplex {s} missing from target basis")
        idx.append(pos[s])

    def f(x):
        y = [0] * len(dst_basis)
        for i, v in zip(idx, x):
            y[i] = v
        return y

    return f


def restriction(src_basis: Sequence, dst_basis: Sequence):
    pos = {s: i for i, s in enumerate(src_basis)}
    idx = [pos[s] for s in dst_basis]
    return lambda x: [x[i] for i in idx]


def induced_map(X: SimplicialComplex, F: SimplicialComplex, F2: SimplicialComplex,
                k: int) -> InducedMap:
    """H^k(X, F) -> H^k(X, F2) for F2 ⊆ F, induced by extension by zero."""
    if not F2.is_subcomplex_of(F):
        raise InputError("subcomplexes are not nested")
    A = relative_cochain_complex(X, F)
    B = relative_cochain_complex(X, F2)
    ca, cb = CohomologyClasses(A, k), CohomologyClasses(B, k)
    return map_classes(ca, cb, extension_by_zero(ca.basis, cb.basis))


def inclusion_image_rank(A: ChainComplex, B: ChainComplex, k: int) -> int:
    """Rational rank of the image of H^k(A) -> H^k(B) for a subcomplex A ⊆ B.

    A must be a cochain subcomplex: its basis is a subset of B's and the
    coboundary of B preserves cochains supported on it.
    """
    nA = A.size(k)
    zA = nA - A.out_map(k).rank()
    inc = B.in_map(k)
    inA = set(A.bases.get(k, ()))
    outside = [i for i, s in enumerate(B.bases.get(k, ())) if s not in inA]
    return zA - inc.rank() + inc.select_rows(outside).rank()


def image_rank_composite(complexes: Sequence[ChainComplex], k: int) -> list[list[int]]:
    """Pairwise inclusion image ranks r[i][j] for i <= j in a nested list."""
    n = len(complexes)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            out[i][j] = inclusion_image_rank(complexes[i], complexes[j], k)
    return out


def export_triplets(M: SparseMatrix) -> str:
    lines = [f"{M.nrows} {M.ncols}"]
    lines += [f"{i} {j} {v}" for i, j, v in M.triplets()]
    return "\n".join(lines) + "\n"


def import_triplets(text: str) -> SparseMatrix:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    nrows, ncols = map(int, lines[0])
    return SparseMatrix.from_triplets(nrows, ncols,
                                      [tuple(map(int, ln)) for ln in lines[1:]])
