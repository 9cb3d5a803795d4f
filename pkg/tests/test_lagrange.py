import numpy as np
import pytest

from superlie2.catalog import labelled_cochain, load
from superlie2.cohomology import d1
from superlie2.errors import NotFlat, NotLagrangianCocycle
from superlie2.field import gf
from superlie2.forms import find_strong_polarizations
from superlie2.lagrange import (
    ExtensionTuple,
    FlatLieSuperalgebra,
    build_extension,
    cochain,
    dual_module,
    extensions_equivalent,
    extract_tuple,
    lagrangian_cocycle_space,
)
from superlie2.superalg import verify_representation


def base(eps=1, k=1):
    ld = load("nabla-eps", gf(k), {"eps": eps})
    return ld, FlatLieSuperalgebra(ld.algebra, ld.connection)


def test_torsioned_connection_rejected():
    from superlie2.connections import Connection

    g = load("L^1_{1|1}").algebra
    zero = Connection(g, np.zeros((2, 2, 2), dtype=np.int64))  # torsion T = bracket
    with pytest.raises(NotFlat):
        FlatLieSuperalgebra(g, zero)
    assert FlatLieSuperalgebra(g, zero, require_torsion_free=False).h is g


def test_dual_modules_are_representations():
    _, fh = base()
    for kind in ("even", "odd"):
        assert verify_representation(fh.h, dual_module(fh, kind)).ok


def test_lagrangian_cohomology_dims():  # [PAPER] dim 1 at eps = 1
    _, fh = base()
    assert lagrangian_cocycle_space(fh, "even", 0).dim == 1


def test_extension_and_extraction_round_trip():
    ld, fh = base()
    c = labelled_cochain(ld, fh, "alpha2+gamma31")
    t = ExtensionTuple(fh, c, "even")
    ext = build_extension(t)
    assert ext.g.sdim == (2, 2)
    ex = extract_tuple(ext.polarization)
    assert ex.report.ok
    assert extensions_equivalent(t, ex.tuple).equivalent


def test_coboundary_shift_is_equivalent():
    ld, fh = base()
    c = labelled_cochain(ld, fh, "alpha2+gamma31")
    r = c.r
    # a symmetric 1-cochain sigma: h -> h*, here sigma(e1) = e1*
    sigma = np.zeros((r.dim, fh.h.dim), dtype=np.int64)
    sigma[0, 0] = 1
    c2 = c + d1(fh.h, r, sigma)
    eq = extensions_equivalent(ExtensionTuple(fh, c, "even"), ExtensionTuple(fh, c2, "even"))
    assert eq.equivalent and eq.isomorphism is not None


def test_non_lagrangian_cocycle_rejected():
    _, fh = base()
    c = cochain(fh, "even", {(0, 1): np.array([1, 0])})  # alpha(e1, e2) = e1*, parity-odd
    with pytest.raises(NotLagrangianCocycle):
        build_extension(ExtensionTuple(fh, c, "even"))


def test_every_polarization_of_extension_extracts():
    ld, fh = base()
    ext = build_extension(ExtensionTuple(fh, labelled_cochain(ld, fh, "alpha2+gamma31"), "even"))
    for p in find_strong_polarizations(ext.g, ext.form):
        ex = extract_tuple(p, allow_torsion=True)
        assert ex.tuple.base.h.dim == 2
        if ex.extension is not None:
            assert ex.report.ok


def test_ba1_dims():  # [PAPER] 4 at eps = 0, 1 at eps = 1
    for eps, want in ((0, 4), (1, 1)):
        ld = load("ba(1)", gf(1), {"eps": eps})
        fh = FlatLieSuperalgebra(ld.algebra, ld.connection)
        assert lagrangian_cocycle_space(fh, "even").dim == want


def test_lagrangian_dims_vanish_off_eps_one():  # [PAPER]
    for eps in (0, 2, 3):
        _, fh = base(eps, 2)
        assert lagrangian_cocycle_space(fh, "even", 0).dim == 0
