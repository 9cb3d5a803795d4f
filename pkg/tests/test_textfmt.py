import numpy as np
import pytest

from superlie2.catalog import catalog, emit, instances
from superlie2.errors import ParseError, VerificationFailure
from superlie2.field import gf
from superlie2.textfmt import cocycle_blocks, eval_scalar, parse_document, read_algebra_file

GOOD = """field 2^2 0x7
sdim 1 1
basis x | y
param t
bracket x y = (1+t)*y
"""


def test_params_and_hex_coefficients():
    af = read_algebra_file(GOOD, params={"t": 2})
    assert af.algebra.field == gf(2)
    assert int(af.algebra.c[0, 1, 1]) == 3


def test_scalar_expressions():
    F = gf(2)
    assert eval_scalar(F, "(1+eps)*eps", {"eps": 2}) == F.mul(3, 2)
    assert eval_scalar(F, "eps**2", {"eps": 2}) == 3
    assert eval_scalar(F, "eps**-1", {"eps": 2}) == 3
    assert eval_scalar(F, "0x3", {}) == 3


@pytest.mark.parametrize(
    "text,line",
    [
        ("sdim 1 1\nbasis a | b\nbracket a c = b\n", 3),
        ("sdim 1 1\nbasis a | b\nbracket a b = b +\n", 3),
        ("sdim 1 1\nbasis a | b\nfrobnicate a\n", 3),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        read_algebra_file(text, gf(1))
    assert exc.value.line == line


def test_verification_failure_on_non_lie():
    text = "sdim 0 1\nbasis | b\nsquaring b = 0\nbracket b b = 0\n"
    with pytest.raises((ParseError, VerificationFailure)):
        read_algebra_file(text, gf(1))


def test_named_cocycle_blocks():
    text = "sdim 1 1\nbasis e1 | e2\nbracket e1 e2 = e2\ncocycle even a\nalpha e1 e2 = e2*\ncocycle even\ngamma e2 = e1*\n"
    doc = parse_document(text)
    named = cocycle_blocks(doc, gf(1), doc.basis, {}, named=True)
    plain = cocycle_blocks(doc, gf(1), doc.basis, {})
    assert list(named) == ["a"] and len(plain) == 1


def _entries():
    cat = catalog()
    return [n for n in cat.names() if cat.get(n).table != "lss"]


@pytest.mark.parametrize("name", _entries())
def test_emit_parse_round_trip(name):
    e = catalog().get(name)
    F = gf(2) if e.params else gf(1)
    ld = instances(name, F, verify=False)[0]
    text = emit(name, F, ld.bindings)
    af = read_algebra_file(text, verify=False)
    assert af.algebra.same_structure(ld.algebra)
    if ld.product is not None:
        assert np.array_equal(af.product.a, ld.product.a)
    if ld.connection is not None:
        assert af.connection == ld.connection
    assert [w.gram.tolist() for w in af.forms] == [w.gram.tolist() for w in ld.forms]
