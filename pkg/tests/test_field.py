import numpy as np
import pytest

from superlie2.errors import DegreeOutOfRange, DivisionByZero, ReducibleModulus
from superlie2.field import clmul, gf, is_irreducible, parse_field_spec, poly_mod


def test_gf2_is_bitwise():  # [TRIVIAL]
    F = gf(1)
    assert [F.mul(a, b) for a in (0, 1) for b in (0, 1)] == [0, 0, 0, 1]


def test_gf4_table():  # [TRIVIAL] a^2 = a + 1 with modulus x^2 + x + 1
    F = gf(2)
    assert F.modulus == 0x7
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.inv(3) == 2


def test_clmul_and_reduction():  # [TRIVIAL]
    assert clmul(0b11, 0b11) == 0b101
    assert poly_mod(0b100, 0b111) == 0b11


def test_irreducibility():  # [TRIVIAL]
    assert is_irreducible(0b111)
    assert not is_irreducible(0b101)  # (x+1)^2
    with pytest.raises(ReducibleModulus):
        gf(2, 0b101)
    with pytest.raises(DegreeOutOfRange):
        gf(0)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        gf(2).inv(0)


def test_parse_and_format():
    F = parse_field_spec("2^3", "0xb")
    assert (F.k, F.modulus) == (3, 0xB)
    assert F.parse("0x5") == 5 and F.fmt(5) == "5"
    with pytest.raises(ValueError):
        F.parse("9")
    with pytest.raises(ValueError):
        parse_field_spec("3^2")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_field_axioms_exhaustive(k):
    F = gf(k)
    els = np.arange(F.q)
    M = F.mul(els[:, None], els[None, :])
    assert (M == M.T).all()
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
    # distributivity over xor
    for a in range(F.q):
        assert all(F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c) for b in range(F.q) for c in range(F.q))


def test_matmul_matches_scalar_loop():
    F = gf(2)
    rng = np.random.default_rng(0)
    A, B = rng.integers(0, 4, (3, 4)), rng.integers(0, 4, (4, 2))
    ref = np.zeros((3, 2), dtype=np.int64)
    for i in range(3):
        for j in range(2):
            for k in range(4):
                ref[i, j] ^= F.mul(int(A[i, k]), int(B[k, j]))
    assert (F.matmul(A, B) == ref).all()
