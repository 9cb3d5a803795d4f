"""Recompute every stored table and summarise agreement.

Rows marked MISMATCH are real deviations between a stored claim and the
computation; out-of-scope rows fall outside the hypotheses the claim needs.
Run: python3 demos/03_reproduce_tables.py [TABLE ...]
"""
import sys
import time

from superlie2.catalog.harness import TABLES, reproduce

ids = sys.argv[1:] or [t for t in TABLES if not t.startswith("appendixB-")]
for tid in ids:
    t0 = time.perf_counter()
    rep = reproduce(tid)
    c = rep.counts()
    print(f"{tid:15s} {c['match']:5d} match {c['MISMATCH']:3d} mismatch {c['out-of-scope']:3d} out-of-scope "
          f"{c['stored']:4d} stored  ({time.perf_counter() - t0:.1f}s)")
    for r in rep.rows:
        if r.status in ("MISMATCH", "out-of-scope"):
            print(f"    {r.field} {r.item} {r.check}: expected {r.expected}, got {r.computed} [{r.status}]")
