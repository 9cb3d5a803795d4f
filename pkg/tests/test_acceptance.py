"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run ``python tests/acceptance.py`` for the bare 13-line report.
"""
import pytest

from acceptance import CRITERIA, line

RESULTS: dict[int, str] = {}


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion-{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn):
    out = fn()
    RESULTS[num] = line(num, title, out)
    print(RESULTS[num])
    assert out.ok, RESULTS[num]
