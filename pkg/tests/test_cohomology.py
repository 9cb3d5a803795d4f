import numpy as np
import pytest

from superlie2.catalog import load
from superlie2.cohomology import (
    Cochain2,
    Layout2,
    coboundary_space,
    cocycle_space,
    cohomology,
    cohomology_dim,
    d1,
    d1_matrix,
    d2,
    d2_matrix,
)
from superlie2.field import gf
from superlie2.superalg import adjoint_module, trivial_module

NAMES = ["L^1_{1|1}", "L^2_{1|1}", "L^3_{1|1}", "L^1_{2|0}", "L^2_{2|0}", "L^1_{0|2}"]


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("k", [1, 2])
def test_d2_d1_vanishes(name, k):
    g = load(name, gf(k)).algebra
    for r in (trivial_module(g), adjoint_module(g), trivial_module(g, 0, 1)):
        assert not g.field.matmul(d2_matrix(g, r), d1_matrix(g, r)).any()


@pytest.mark.parametrize("name", NAMES)
def test_dimension_formula(name):
    g = load(name).algebra
    r = adjoint_module(g)
    co = cohomology(g, r, 2)
    assert co.dim == cocycle_space(g, r, 2).dim - coboundary_space(g, r, 2).dim
    assert len(co.classes()) == co.dim


def test_parity_split_adds_up():
    g = load("L^1_{0|2}").algebra
    r = adjoint_module(g)
    total = cohomology_dim(g, r, 2)
    assert total == cohomology_dim(g, r, 2, 0) + cohomology_dim(g, r, 2, 1)


def test_layout_roundtrip():
    g = load("L^2_{1|1}").algebra
    r = adjoint_module(g)
    lay = Layout2(g, r)
    rng = np.random.default_rng(1)
    for _ in range(10):
        v = rng.integers(0, 2, lay.size)
        assert (lay.encode(lay.decode(v)) == v).all()


def test_squaring_coboundary_of_odd_vector():
    # identity map on the adjoint module of L^2_{1|1}: the gamma slot at e2 is s(e2) = e1
    g = load("L^2_{1|1}").algebra
    r = adjoint_module(g)
    c = d1(g, r, np.eye(2, dtype=np.int64))
    assert (c.gamma[1] == [1, 0]).all()
    assert d2(g, r, c).is_zero


def test_zero_cochain():
    g = load("L^1_{1|1}").algebra
    c = Cochain2.zero(g, trivial_module(g))
    assert c.is_zero() and c.parity() == 0
