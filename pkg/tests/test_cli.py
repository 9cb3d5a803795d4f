import json

import pytest

from superlie2.cli import run

EXT = """field 2^1 0x3
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


def cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_catalog(capsys):
    code, out, _ = cli(capsys, "verify", "--catalog", "L^2_{1|1}")
    assert code == 0 and "Lie axioms: pass" in out


def test_extend_matches_stored_extension(capsys):
    code, out, _ = cli(capsys, "extend", "--base", "L^1_{1|1}", "--connection", "eps=1", "--cocycle", "alpha2+gamma31")
    assert code == 0
    assert out.strip() == EXT.strip()


def test_extract_from_file(tmp_path, capsys):
    f = tmp_path / "ext.txt"
    f.write_text(EXT)
    code, out, _ = cli(capsys, "extract", str(f))
    assert code == 0
    assert "nabla e1 e2 = e2" in out and "extraction isomorphism: pass" in out


def test_invariants_machine_output(capsys):
    code, out, _ = cli(capsys, "invariants", "--catalog", "L^1_{1|1}", "--machine")
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert list(recs[0]) == ["command", "item", "key", "value"]
    assert {r["key"]: r["value"] for r in recs} == {"sdim": "1|1", "derived": "0|1", "center": "0|0", "XH1": 1, "XH2": 1}


def test_lagrangian_cohomology(capsys):
    code, out, _ = cli(capsys, "lagrangian-cohomology", "--catalog", "nabla-eps", "--field", "2^2", "--param", "eps=1", "--parity", "even")
    assert code == 0 and "dim XH2_L (even, even): 1" in out


def test_search_lss_counts(capsys):
    code, out, _ = cli(capsys, "search-lss", "--catalog", "L^1_{2|0}")
    assert code == 0 and "up to automorphism: 8" in out


def test_queerify(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("sdim 1 0\nbasis e1 |\nprod e1 e1 = e1\n")
    code, out, _ = cli(capsys, "queerify", str(f))
    assert code == 0 and "squaring Pe1 = e1" in out


def test_classify_dim2(capsys):
    code, out, _ = cli(capsys, "classify")
    assert code == 0 and "(1|1) classes: 3" in out and "(2|0) classes: 2" in out and "(0|2) classes: 1" in out


def test_reproduce_exit_codes(capsys):
    assert cli(capsys, "reproduce", "pasha")[0] == 0
    assert cli(capsys, "reproduce", "hamiltonian")[0] == 1  # stored claim deviates


def test_emit_list(capsys):
    code, out, _ = cli(capsys, "emit", "list")
    assert code == 0 and "entry: pasha" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--catalog", "nope"],
        ["verify"],
        ["verify", "--catalog", "nabla-eps"],
        ["bogus"],
        ["cohomology", "--catalog", "L^1_{1|1}", "--degree", "3"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert cli(capsys, *argv)[0] == 2


def test_parse_error_exit_2(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("sdim 1 1\nbasis a | b\nbracket a c = b\n")
    code, _, err = cli(capsys, "verify", str(f))
    assert code == 2 and "line 3" in err


def test_verification_failure_exit_1(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("sdim 1 1\nbasis a | b\nbracket a b = a\n")
    code, out, _ = cli(capsys, "verify", str(f))
    assert code == 1 and "FAIL" in out


def test_help_documents_format(capsys):
    code, out, _ = cli(capsys, "--help")
    assert code == 0 and "squaring ei = <vector>" in out and "cocycle even|odd [label]" in out
