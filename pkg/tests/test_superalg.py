import numpy as np
import pytest

from superlie2.catalog import load
from superlie2.cohomology import cohomology_dim
from superlie2.errors import NotAnIdeal, NotOdd
from superlie2.field import gf
from superlie2.linalg import Subspace
from superlie2.superalg import (
    LieSuperalgebra,
    adjoint_module,
    center,
    derived_subalgebra,
    is_ideal,
    quotient,
    superdim_of,
    trivial_module,
    verify_lie,
    verify_representation,
)

# [DERIVED] invariants of the 2-dim catalog algebras over GF(2), frozen from
# the implementation and cross-checked against the dimension-2 table
DIM2 = {
    "L^1_{1|1}": ((0, 1), (0, 0), 1, 1),
    "L^2_{1|1}": ((1, 0), (1, 0), 1, 0),
    "L^3_{1|1}": ((0, 0), (1, 1), 2, 2),
    "L^1_{2|0}": ((1, 0), (0, 0), 1, 0),
    "L^2_{2|0}": ((0, 0), (2, 0), 2, 1),
    "L^1_{0|2}": ((0, 0), (0, 2), 2, 3),
}


@pytest.mark.parametrize("name", sorted(DIM2))
def test_dim2_invariants(name):
    g = load(name).algebra
    der, cen, h1, h2 = DIM2[name]
    K = trivial_module(g)
    assert tuple(superdim_of(g, derived_subalgebra(g))) == der
    assert tuple(superdim_of(g, center(g))) == cen
    assert cohomology_dim(g, K, 1) == h1
    assert cohomology_dim(g, K, 2) == h2


def test_broken_squaring_jacobi_is_reported():
    F = gf(1)
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 1, 0] = c[1, 0, 0] = 1  # [e1, e2] = e1 has the wrong parity
    rep = verify_lie(LieSuperalgebra(F, 1, 1, c, np.zeros((2, 2), dtype=np.int64)))
    assert not rep.ok and "parity" in rep.identities_failed()


def test_squaring_only_on_odd():
    g = load("L^2_{1|1}").algebra
    assert (g.squaring(np.array([0, 1])) == [1, 0]).all()
    with pytest.raises(NotOdd):
        g.squaring(np.array([1, 1]))


def test_squaring_semilinear_over_gf4():
    g = load("L^2_{1|1}", gf(2)).algebra
    F = g.field
    for lam in F.nonzero():
        x = np.array([0, lam])
        assert (g.squaring(x) == F.mul(F.mul(lam, lam), g.squaring(np.array([0, 1])))).all()


def test_center_uses_square_zero_odd_part():
    # L^2_{1|1}: the odd e2 commutes with everything but s(e2) = e1 != 0
    g = load("L^2_{1|1}").algebra
    assert tuple(superdim_of(g, center(g))) == (1, 0)


def test_quotient_by_derived():
    g = load("L^1_{1|1}").algebra
    q = quotient(g, derived_subalgebra(g))
    assert tuple(q.algebra.sdim) == (1, 0)
    with pytest.raises(NotAnIdeal):
        quotient(g, Subspace(g.field, 2, np.array([[1, 0]])))


def test_modules_verify():
    for name in DIM2:
        g = load(name).algebra
        assert verify_representation(g, adjoint_module(g)).ok
        assert verify_representation(g, trivial_module(g, 1, 1)).ok


def test_is_ideal():
    g = load("L^1_{1|1}").algebra
    assert is_ideal(g, Subspace(g.field, 2, np.array([[0, 1]])))
