from hypothesis import given, settings
from hypothesis import strategies as st

from cuspcoh.compact import les_check
from cuspcoh.groups import GroupSpec, free_reduce, inverse, multiply, normal_form
from cuspcoh.homology import (SimplicialComplex, SparseMatrix, determinant, matmul,
                              smith_normal_form)

matrices = st.integers(1, 6).flatmap(lambda m: st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=m, max_size=m)))


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_snf_identity(A):
    sf = smith_normal_form(A)
    assert matmul(matmul(sf.U, A), sf.V) == sf.S
    assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1
    d = sf.diagonal
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert SparseMatrix.from_dense(A).invariant_factors() == d


words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12)


@given(words, words, words)
@settings(max_examples=80, deadline=None)
def test_free_group_axioms(u, v, w):
    F = GroupSpec.free(2)
    assert multiply(F, multiply(F, u, v), w) == multiply(F, u, multiply(F, v, w))
    assert multiply(F, u, inverse(u)) == ()
    assert normal_form(F, normal_form(F, u)) == normal_form(F, u) == free_reduce(u)


@given(words, words)
@settings(max_examples=60, deadline=None)
def test_abelian_normal_form_commutes(u, v):
    Z2 = GroupSpec.free_abelian(2)
    assert multiply(Z2, u, v) == multiply(Z2, v, u)


triangles = st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
                     .filter(lambda t: len(set(t)) == 3), min_size=1, max_size=6)


@given(triangles, st.integers(0, 2**20))
@settings(max_examples=25, deadline=None)
def test_les_random_pairs(tris, mask):
    X = SimplicialComplex([tuple(sorted(t)) for t in tris])
    cells = X.all_simplices()
    chosen = [s for i, s in enumerate(cells) if (mask >> (i % 20)) & 1]
    F = SimplicialComplex(chosen)
    assert les_check(X, F).exact
