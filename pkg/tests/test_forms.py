import numpy as np
import pytest

from superlie2.catalog import load
from superlie2.errors import QuasiFrobeniusViolation
from superlie2.field import gf
from superlie2.forms import (
    BilinearForm,
    classify_form,
    closed_form_space,
    find_strong_polarizations,
    homogeneous_nondegenerate,
    is_closed,
    lagrangian_ideals,
)


def _ext():
    # T*-extension of L^1_{1|1} with cocycle alpha2+gamma31 at eps=1
    from superlie2.textfmt import read_algebra_file

    text = """field 2^1 0x3
sdim 2 2
basis e1 e1* | e2 e2*
bracket e1 e2 = e2 + e2*
bracket e1 e2* = e2*
squaring e2 = e1*
form even
w e1 e1* = 1
w e2 e2* = 1
ideal e1*; e2*
complement e1; e2
"""
    return read_algebra_file(text)


def test_extension_form_is_ortho_orthogonal_and_closed():
    af = _ext()
    g, w = af.algebra, af.forms[0]
    assert is_closed(g, w).ok
    assert w.is_nondegenerate(g.field)
    fc = classify_form(w)
    assert fc.kind == "ortho-orthogonal" and fc.o_antisymmetric


def test_polarizations_found():
    af = _ext()
    g, w = af.algebra, af.forms[0]
    pols = find_strong_polarizations(g, w)
    assert pols and all(p.check().ok for p in pols)
    ideal_rows = {p.lagrangian_ideal.key() for p in pols}
    assert len(ideal_rows) == len(lagrangian_ideals(g, w))


def test_degenerate_form_rejected():
    g = load("L^3_{1|1}").algebra
    w = BilinearForm.on(g, np.zeros((2, 2), dtype=np.int64))
    with pytest.raises(QuasiFrobeniusViolation):
        find_strong_polarizations(g, w)


def test_closed_forms_on_abelian():
    # every o-antisymmetric form on the abelian (0|2) algebra is closed  [TRIVIAL]
    g = load("L^3_{1|1}").algebra  # abelian (1|1)
    fs = closed_form_space(g)
    assert fs.dim >= 1
    assert all(is_closed(g, w).ok for w in fs.forms())


def test_form_parity():
    g = load("L^3_{1|1}", gf(2)).algebra
    odd = BilinearForm.on(g, np.array([[0, 1], [1, 0]]))
    assert odd.parity == 1 and classify_form(odd).kind == "periplectic"
    mixed = BilinearForm.on(g, np.array([[1, 1], [1, 0]]))
    assert mixed.parity is None


def test_homogeneous_nondegenerate_subset():
    g = load("L^3_{1|1}").algebra
    for w in homogeneous_nondegenerate(closed_form_space(g)):
        assert w.is_nondegenerate(g.field) and w.parity is not None
