import numpy as np

from superlie2.field import gf
from superlie2.linalg import Subspace, count_subspaces, enumerate_subspaces, gl_order, inverse, nullspace, rank, rref, solve


def test_rank_and_nullspace_gf2():  # [TRIVIAL]
    F = gf(1)
    M = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert rank(F, M) == 2
    ns = nullspace(F, M, 3)
    assert ns.dim == 1 and ns.contains(np.array([1, 1, 1]))


def test_rref_pivots():
    F = gf(2)
    R, r, piv = rref(F, np.array([[2, 3], [1, 1]]))
    assert r == 2 and piv == [0, 1]
    # a*a = a+1, so the rows below are proportional over GF(4)
    assert rref(F, np.array([[2, 3], [1, 2]]))[1] == 1


def test_inverse_and_solve():
    F = gf(2)
    A = np.array([[2, 1], [1, 1]])
    Ai = inverse(F, A)
    assert (F.matmul(A, Ai) == np.eye(2, dtype=np.int64)).all()
    x = solve(F, A, np.array([1, 0]))
    assert (F.matmul(A, x) == [1, 0]).all()
    assert inverse(F, np.array([[1, 1], [1, 1]])) is None


def test_subspace_operations():
    F = gf(1)
    a = Subspace(F, 3, np.array([[1, 0, 0], [0, 1, 0]]))
    b = Subspace(F, 3, np.array([[0, 1, 0], [0, 0, 1]]))
    assert a.intersection(b).dim == 1
    assert a.sum(b).dim == 3
    assert a == Subspace(F, 3, np.array([[1, 1, 0], [0, 1, 0]]))


def test_subspace_counts():  # [TRIVIAL] Gaussian binomials and |GL|
    F = gf(1)
    for n in range(4):
        for k in range(n + 1):
            assert sum(1 for _ in enumerate_subspaces(F, n, k)) == count_subspaces(2, n, k)
    assert count_subspaces(2, 4, 2) == 35
    assert gl_order(2, 2) == 6 and gl_order(4, 2) == 180
