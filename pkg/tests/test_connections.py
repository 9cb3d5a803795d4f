import numpy as np
import pytest

from superlie2.catalog import load
from superlie2.connections import (
    Connection,
    associated_lie,
    curvature,
    dual_connection,
    identity_suite,
    is_dual_flat,
    is_flat,
    is_parallel,
    is_torsion_free,
    post_lie_from_flat_parallel,
    random_connection,
    torsion,
)
from superlie2.errors import NotFlatParallel
from superlie2.field import gf
from superlie2.leftsym import enumerate_compatible_products

NAMES = ["L^1_{1|1}", "L^2_{1|1}", "L^3_{1|1}", "L^1_{2|0}", "L^2_{2|0}", "L^1_{0|2}"]


@pytest.mark.parametrize("name", NAMES)
def test_identity_suite_random(name):
    for k in (1, 2):
        g = load(name, gf(k)).algebra
        for seed in range(20):
            assert identity_suite(g, random_connection(g, seed)).ok


def test_random_connection_is_even_and_seeded():
    g = load("L^1_{1|1}", gf(2)).algebra
    a, b = random_connection(g, 7), random_connection(g, 7)
    assert a == b and a.is_even()


@pytest.mark.parametrize("name", NAMES)
def test_compatible_products_give_flat_torsion_free(name):
    g = load(name).algebra
    for p in enumerate_compatible_products(g):
        n = Connection.from_product(g, p)
        assert is_flat(g, n) and is_torsion_free(g, n) and is_parallel(g, n)
        assert n.to_product().key() == p.key()


def test_dual_connection_involution():
    g = load("L^1_{1|1}", gf(2)).algebra
    n = random_connection(g, 3)
    assert dual_connection(g, dual_connection(g, n)) == n


def test_zero_connection_torsion_is_bracket():
    g = load("L^2_{1|1}").algebra
    z = Connection(g, np.zeros((2, 2, 2), dtype=np.int64))
    t = torsion(g, z)
    assert (t.T == g.c).all()
    assert (t.U["e2"] == g.sq[1]).all()
    assert not curvature(g, z).R.any()


def test_post_lie_round_trip_zero_connection():
    g = load("L^1_{1|1}").algebra
    z = Connection(g, np.zeros((2, 2, 2), dtype=np.int64))
    pl = post_lie_from_flat_parallel(g, z)
    assert associated_lie(pl).same_structure(g)


def test_post_lie_requires_flat_parallel():
    g = load("L^1_{1|1}").algebra
    bad = [random_connection(g, s) for s in range(40)]
    bad = [n for n in bad if not is_flat(g, n)]
    assert bad
    with pytest.raises(NotFlatParallel):
        post_lie_from_flat_parallel(g, bad[0])


def test_catalog_connections_flat_torsion_free():
    for eps in range(4):
        ld = load("nabla-eps", gf(2), {"eps": eps})
        g, n = ld.algebra, ld.connection
        assert is_flat(g, n) and is_torsion_free(g, n) and is_dual_flat(g, n)
