"""Lagrangian extensions: from a flat torsion-free connection and a cocycle to a
quasi-Frobenius superalgebra, and back again.

Run: python3 demos/02_lagrangian_extension.py
"""
from superlie2.catalog import labelled_cochain, load
from superlie2.field import gf
from superlie2.lagrange import (
    ExtensionTuple,
    FlatLieSuperalgebra,
    build_extension,
    extensions_equivalent,
    extract_tuple,
    lagrangian_cocycle_space,
)
from superlie2.textfmt import emit_algebra, emit_cocycle, emit_connection, emit_form

# The connection family nabla(eps) on L^1_{1|1}, looked at over GF(4).
F = gf(2)
for eps in F.elements():
    ld = load("nabla-eps", F, {"eps": eps})
    fh = FlatLieSuperalgebra(ld.algebra, ld.connection)
    coh = lagrangian_cocycle_space(fh, "even", 0)
    print(f"eps={F.fmt(eps)}: dim XH2_L = {coh.dim}")
print()

# At eps = 1 the labelled cochain alpha2+gamma31 represents the nonzero class.
ld = load("nabla-eps", gf(1), {"eps": 1})
fh = FlatLieSuperalgebra(ld.algebra, ld.connection)
c = labelled_cochain(ld, fh, "alpha2+gamma31")
t = ExtensionTuple(fh, c, "even")
ext = build_extension(t)
print("T*-extension:")
print(emit_algebra(ext.g) + emit_form(ext.form, list(ext.g.names), ext.g.field))

# Extraction reads the tuple back from the form and the Lagrangian ideal.
ex = extract_tuple(ext.polarization)
print("recovered tuple:")
print(emit_connection(ex.tuple.base.nabla) + emit_cocycle(ex.tuple.cocycle, ex.tuple.kind))
eq = extensions_equivalent(t, ex.tuple)
print(f"equivalent to the input tuple: {eq.equivalent}")
