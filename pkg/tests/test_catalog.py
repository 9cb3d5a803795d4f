import pytest

from superlie2.catalog import catalog, check_claims, entry, instances, labelled_cochain, load
from superlie2.catalog.harness import TABLES, reproduce
from superlie2.errors import ConstraintViolation, UnknownEntry
from superlie2.field import gf
from superlie2.lagrange import FlatLieSuperalgebra


def test_catalog_size_and_tables():  # [DERIVED] frozen entry counts
    cat = catalog()
    assert len(cat.names()) == 140
    assert len(cat.names("dim2")) == 6


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        load("L^zz_{9|9}")


def test_parameter_constraints():
    with pytest.raises(ConstraintViolation):
        load("nabla-eps", gf(1))  # eps missing
    with pytest.raises(ConstraintViolation):
        load("nabla-eps", gf(1), {"eps": 2})  # not in GF(2)
    with pytest.raises(ConstraintViolation):
        load("L^1_{1|1}", gf(1), {"nu": 1})


def test_instances_cover_admissible_bindings():
    e = entry("nabla-eps")
    assert len(instances("nabla-eps", gf(2))) == len(e.admissible_bindings(gf(2))) == 4


def test_labelled_cochain_sums_and_rejects():
    ld = load("nabla-eps", gf(1), {"eps": 1})
    fh = FlatLieSuperalgebra(ld.algebra, ld.connection)
    c = labelled_cochain(ld, fh, "alpha2+gamma31")
    assert c.alpha[0, 1].tolist() == [0, 1] and c.gamma[1].tolist() == [1, 0]
    assert labelled_cochain(ld, fh, "0").is_zero()
    with pytest.raises(UnknownEntry):
        labelled_cochain(ld, fh, "alpha99")


@pytest.mark.parametrize("name", [n for n in catalog().names() if catalog().get(n).table in ("dim2", "examples")])
def test_entries_verify(name):
    e = entry(name)
    F = gf(2) if e.params else gf(1)
    for ld in instances(name, F):
        for res in check_claims(ld):
            assert res.ok, res


@pytest.mark.parametrize("tid", ["dim2", "nabla-eps", "ba1", "pasha"])
def test_tables_without_deviations(tid):
    rep = reproduce(tid)
    assert rep.ok and rep.counts()["match"] > 0


def test_reproduce_unknown_table():
    with pytest.raises(UnknownEntry):
        reproduce("nope")
    assert "appendixC-2|2" in TABLES
