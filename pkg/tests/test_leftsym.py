import numpy as np
import pytest

from superlie2.catalog import load
from superlie2.errors import NotCompatible, NotLeftAlternative
from superlie2.field import gf
from superlie2.leftsym import (
    Product,
    affine_embedding,
    enumerate_compatible_products,
    is_compatible,
    is_left_alternative,
    is_left_symmetric,
    left_alternative_failures,
    lie_of_product,
    product_from_derivation,
    products_isomorphic,
    queerify_product,
    restricted_of_product,
)
from superlie2.superalg import queerify, verify_restricted

# [DERIVED] (orbit representatives, raw products) over GF(2), frozen
ORBITS = {
    "L^1_{1|1}": (3, 3),
    "L^2_{1|1}": (2, 2),
    "L^3_{1|1}": (3, 3),
    "L^1_{2|0}": (8, 12),
    "L^2_{2|0}": (6, 22),
    "L^1_{0|2}": (1, 1),
}


@pytest.mark.parametrize("name", sorted(ORBITS))
def test_enumeration_counts(name):
    g = load(name).algebra
    raw = enumerate_compatible_products(g)
    reps = enumerate_compatible_products(g, "aut_orbits")
    assert (len(reps), len(raw)) == ORBITS[name]
    assert all(is_compatible(p, g) for p in raw)
    # orbits partition the raw list
    assert sum(1 for p in raw if any(products_isomorphic(g, q, p) for q in reps)) == len(raw)


def test_pasha_left_symmetric_not_left_alternative():
    p = load("pasha").product
    assert is_left_symmetric(p).ok
    rep = left_alternative_failures(p)
    assert not rep.ok and rep.failures[0].where
    with pytest.raises(NotLeftAlternative):
        queerify_product(p)


def test_queerify_unit_product():  # [TRIVIAL] the 1-dim unital algebra doubles to q(1)
    p = Product(gf(1), 1, 0, np.array([[[1]]]))
    q = queerify_product(p)
    g = lie_of_product(q)
    assert g.sdim == (1, 1) and (g.sq[1] == [1, 0]).all()
    assert g.same_structure(queerify(restricted_of_product(p)))


def test_restricted_of_left_alternative():
    p = Product(gf(1), 2, 0, np.array([[[1, 0], [0, 1]], [[0, 0], [0, 0]]]))
    assert is_left_alternative(p)
    assert verify_restricted(restricted_of_product(p)).ok


def test_affine_embedding_faithful():
    g = load("L^1_{1|1}").algebra
    for p in enumerate_compatible_products(g):
        emb = affine_embedding(g, p)
        assert emb.report.ok


def test_affine_embedding_rejects_incompatible():
    # e2 |> e2 = e1 induces s(e2) = e1, but L^3_{1|1} is abelian
    g = load("L^3_{1|1}").algebra
    a = np.zeros((2, 2, 2), dtype=np.int64)
    a[1, 1, 0] = 1
    p = Product.like(g, a)
    assert not is_compatible(p, g)
    with pytest.raises(NotCompatible):
        affine_embedding(g, p)


def test_product_from_identity_derivation_of_abelian():
    # abelian algebra: any invertible derivation gives the zero product  [TRIVIAL]
    g = load("L^3_{1|1}").algebra
    p = product_from_derivation(g, np.eye(2, dtype=np.int64))
    assert p.is_zero()
