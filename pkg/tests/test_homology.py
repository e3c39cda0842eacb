import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest

from cuspcoh.errors import InputError
from cuspcoh.homology import (AbelianGroup, CohomologyClasses, SimplicialComplex,
                              SparseMatrix, betti_numbers, chain_complex, cochain_complex,
                              cohomology, determinant, export_triplets, hermite_normal_form,
                              homology, identity, import_triplets, induced_map,
                              integer_kernel, matmul, relative_cochain_complex, same_lattice,
                              smith_normal_form)


def minors_gcd(A, k):
    """gcd of all k x k minors: the determinantal divisor oracle."""
    m, n = len(A), len(A[0])
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            g = gcd(g, determinant([[A[i][j] for j in cols] for i in rows]))
    return g


def rational_rank(A):
    M = [[Fraction(x) for x in row] for row in A]
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def test_diag_2_3():
    sf = smith_normal_form([[2, 0], [0, 3]], inverses=True)
    assert sf.diagonal == [1, 6]
    assert matmul(matmul(sf.U, [[2, 0], [0, 3]]), sf.V) == sf.S


def test_snf_against_minor_oracle():
    rng = random.Random(3)
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        d = smith_normal_form(A).diagonal
        prev = 1
        for k in range(1, min(m, n) + 1):
            dk = minors_gcd(A, k)
            prod = prev * d[k - 1] if k <= len(d) else 0
            assert dk == abs(prod)
            prev = prod


def test_snf_factors_and_inverses():
    rng = random.Random(11)
    for _ in range(30):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        sf = smith_normal_form(A, inverses=True)
        assert matmul(matmul(sf.U, A), sf.V) == sf.S
        assert matmul(sf.U, sf.Uinv) == identity(m)
        assert matmul(sf.V, sf.Vinv) == identity(n)
        assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1
        d = sf.diagonal
        assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_sparse_rank_and_factors_match_dense():
    rng = random.Random(5)
    for _ in range(30):
        m, n = rng.randint(1, 9), rng.randint(1, 9)
        A = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(n)] for _ in range(m)]
        S = SparseMatrix.from_dense(A)
        assert S.rank() == rational_rank(A)
        assert S.invariant_factors() == smith_normal_form(A).diagonal


def test_solve_integer_systems():
    A = SparseMatrix.from_dense([[2, 0], [0, 3]])
    assert A.solve([4, 9]) == [2, 3]
    assert A.solve([1, 0]) is None
    rng = random.Random(8)
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        M = SparseMatrix.from_dense(dense)
        x = [rng.randint(-4, 4) for _ in range(n)]
        b = M.matvec(x)
        y = M.solve(b)
        assert y is not None and M.matvec(y) == b


def test_hnf_and_kernel():
    assert same_lattice([[2, 0], [0, 2]], [[2, 2], [0, 2]], 2)
    assert not same_lattice([[1, 0]], [[2, 0]], 2)
    H = hermite_normal_form([[4, 6], [2, 2]], 2)
    assert same_lattice(H, [[2, 0], [0, 2]], 2)
    K = integer_kernel([[1, 2, 3]], 3)
    assert len(K) == 2
    assert all(sum(a * b for a, b in zip([1, 2, 3], row)) == 0 for row in K)


def test_triplet_round_trip():
    M = SparseMatrix.from_dense([[0, 1, -2], [3, 0, 0]])
    assert import_triplets(export_triplets(M)).to_dense() == M.to_dense()


def test_abelian_group_text():
    assert str(AbelianGroup(1)) == "1;"
    assert str(AbelianGroup(0, (2,))) == "0; 2"
    assert AbelianGroup.parse("2; 2,4") == AbelianGroup(2, (2, 4))
    with pytest.raises(InputError):
        AbelianGroup(0, (2, 3))


def rp2():
    faces = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5), (2, 3, 4), (2, 3, 5),
             (2, 5, 6), (3, 4, 6), (4, 5, 6)]
    return SimplicialComplex(faces)


def test_projective_plane():
    X = rp2()
    assert homology(X, 1) == AbelianGroup(0, (2,))
    assert homology(X, 2) == AbelianGroup()
    assert cohomology(X, 1) == AbelianGroup()
    assert cohomology(X, 2) == AbelianGroup(0, (2,))
    assert X.euler_characteristic() == 1


def test_sphere_and_torus_betti():
    sphere = SimplicialComplex(list(combinations(range(4), 3)))
    assert betti_numbers(sphere) == [1, 0, 1]
    n = 3
    tri = []
    for i in range(n):
        for j in range(n):
            a, b = (i, j), ((i + 1) % n, j)
            c, d = (i, (j + 1) % n), ((i + 1) % n, (j + 1) % n)
            tri += [(a, b, d), (a, c, d)]
    torus = SimplicialComplex([tuple(sorted(t)) for t in tri])
    assert betti_numbers(torus) == [1, 2, 1]
    assert torus.euler_characteristic() == 0


def test_square_zero_and_duality():
    X = rp2()
    C = chain_complex(X)
    assert C.check_square_zero()
    assert cochain_complex(X).check_square_zero()


def test_relative_hollow_triangle():
    X = SimplicialComplex([(0, 1), (1, 2), (0, 2)])
    F = SimplicialComplex([(0,)])
    R = relative_cochain_complex(X, F)
    assert R.homology(0) == AbelianGroup()
    assert R.homology(1) == AbelianGroup(1)


def test_induced_maps_small():
    X = SimplicialComplex([(0, 1), (1, 2), (0, 2)])
    F = SimplicialComplex([(0,), (1,)])
    F2 = SimplicialComplex([(0,)])
    M = induced_map(X, F, F2, 1)
    assert M.source == AbelianGroup(2) and M.target == AbelianGroup(1)
    assert M.rank() == 1
    edge = SimplicialComplex([(0, 1)])
    Z = induced_map(edge, SimplicialComplex([(0,), (1,)]), SimplicialComplex([(0,)]), 1)
    assert Z.source == AbelianGroup(1) and Z.target == AbelianGroup()


def test_cohomology_classes_coordinates():
    C = cochain_complex(rp2())
    cls = CohomologyClasses(C, 2)
    assert cls.orders == [2]
    for g in cls.generators:
        assert cls.coordinates(g) == [1]


def test_full_subcomplex_and_skeleton():
    X = SimplicialComplex([(0, 1, 2), (2, 3)])
    assert X.full_subcomplex([0, 1, 2]).counts() == [3, 3, 1]
    assert X.skeleton(1).dim == 1
    assert (0, 1) in X and len(X) == 9
