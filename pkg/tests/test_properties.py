"""Hypothesis properties: field laws, Lie identities on random vectors,
theorem identities on random connections, and the extension round trip."""
import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from superlie2.catalog import catalog, instances, load
from superlie2.cohomology import d1, d2
from superlie2.connections import identity_suite, random_connection
from superlie2.field import gf
from superlie2.lagrange import (
    ExtensionTuple,
    FlatLieSuperalgebra,
    build_extension,
    extensions_equivalent,
    extract_tuple,
    lagrangian_cocycle_space,
)
from superlie2.linalg import Subspace, nullspace, rank
from superlie2.superalg import adjoint_module

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _algebra_names():
    cat = catalog()
    return [n for n in cat.names() if cat.get(n).algebra_ref is None and cat.get(n).table in ("dim2", "ext4")]


NAMES = _algebra_names()


@st.composite
def algebra(draw):
    name = draw(st.sampled_from(NAMES))
    e = catalog().get(name)
    k = 2 if e.params else draw(st.sampled_from([1, 2]))
    insts = instances(name, gf(k), verify=False)
    return draw(st.sampled_from(insts)).algebra


def vector(g, draw, odd=False, even=False):
    v = np.array(draw(st.lists(st.integers(0, g.field.q - 1), min_size=g.dim, max_size=g.dim)), dtype=np.int64)
    if odd:
        v[: g.m] = 0
    if even:
        v[g.m :] = 0
    return v


@SETTINGS
@given(st.integers(1, 6), st.data())
def test_field_laws(k, data):
    F = gf(k)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a ^ b, a ^ b) == F.mul(a, a) ^ F.mul(b, b)  # Frobenius is additive
    if a:
        assert F.mul(F.div(b, a), a) == b


@SETTINGS
@given(st.sampled_from([1, 2]), st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_nullity(k, r, c, data):
    F = gf(k)
    M = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=r * c, max_size=r * c)), dtype=np.int64).reshape(r, c)
    ns = nullspace(F, M, c)
    assert rank(F, M) + ns.dim == c
    for v in ns.basis:
        assert not F.matmul(M, v).any()


@SETTINGS
@given(algebra(), st.data())
def test_jacobi_on_random_vectors(g, data):
    F = g.field
    x, y, z = (vector(g, data.draw) for _ in range(3))
    br = g.bracket
    assert not (br(x, br(y, z)) ^ br(y, br(z, x)) ^ br(z, br(x, y))).any()


@SETTINGS
@given(algebra(), st.data())
def test_squaring_identities(g, data):
    if g.n == 0:
        return
    F = g.field
    x, y = vector(g, data.draw, odd=True), vector(g, data.draw, odd=True)
    z = vector(g, data.draw)
    lam = data.draw(st.integers(0, F.q - 1))
    s = g.squaring
    assert (s(x ^ y) == s(x) ^ s(y) ^ g.bracket(x, y)).all()  # polarization
    assert (s(F.mul(lam, x)) == F.mul(F.mul(lam, lam), s(x))).all()
    assert (g.bracket(s(x), z) == g.bracket(x, g.bracket(x, z))).all()


@settings(max_examples=25, deadline=None)
@given(algebra(), st.integers(0, 10**6))
def test_identity_suite_random_connection(g, seed):
    assert identity_suite(g, random_connection(g, seed)).ok


@SETTINGS
@given(algebra(), st.data())
def test_coboundaries_are_cocycles(g, data):
    r = adjoint_module(g)
    F = g.field
    phi = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=g.dim**2, max_size=g.dim**2)), dtype=np.int64)
    assert d2(g, r, d1(g, r, phi.reshape(g.dim, g.dim))).is_zero


def _lagrangian_bases():
    out = []
    for eps in (0, 1):
        ld = load("ba(1)", gf(1), {"eps": eps})
        out.append(FlatLieSuperalgebra(ld.algebra, ld.connection))
    ld = load("nabla-eps", gf(2), {"eps": 1})
    out.append(FlatLieSuperalgebra(ld.algebra, ld.connection))
    return out


BASES = _lagrangian_bases()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(range(len(BASES))), st.data())
def test_extension_round_trip(i, data):
    fh = BASES[i]
    coh = lagrangian_cocycle_space(fh, "even", 0)
    Z = coh.cocycles
    F = Z.field
    coeffs = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=Z.dim, max_size=Z.dim)), dtype=np.int64)
    vec = F.matmul(coeffs, Z.basis) if Z.dim else np.zeros(coh.layout.size, dtype=np.int64)
    c = coh.layout.decode(vec)
    t = ExtensionTuple(fh, c, "even")
    ext = build_extension(t)
    ex = extract_tuple(ext.polarization)
    assert ex.report.ok
    assert extensions_equivalent(t, ex.tuple).equivalent
    # the class is zero exactly when the extension is equivalent to the trivial one
    zero = ExtensionTuple(fh, coh.layout.decode(np.zeros(coh.layout.size, dtype=np.int64)), "even")
    assert extensions_equivalent(t, zero).equivalent == coh.is_coboundary(c)
