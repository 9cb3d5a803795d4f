"""Small Lie superalgebras over GF(2): classification and left-symmetric structures.

Run: python3 demos/01_small_algebras.py
"""
from superlie2.catalog import catalog, classify_dim2, load
from superlie2.cohomology import cohomology_dim
from superlie2.field import gf
from superlie2.leftsym import enumerate_compatible_products, is_left_alternative
from superlie2.superalg import center, derived_subalgebra, superdim_of, trivial_module
from superlie2.textfmt import emit_product

F = gf(1)

# Every structure tuple on a 2-dim superspace is enumerated, the Lie ones are
# kept, and they are grouped by isomorphism.
res = classify_dim2(F)
for sd in ((1, 1), (2, 0), (0, 2)):
    print(f"sdim {sd[0]}|{sd[1]}: {res.valid[sd]} Lie tuples out of {res.tuples[sd]}, {res.count(sd)} classes")
print()

# Invariants that separate the classes.
for name in catalog().names("dim2"):
    g = load(name, F).algebra
    K = trivial_module(g)
    d = superdim_of(g, derived_subalgebra(g))
    z = superdim_of(g, center(g))
    print(f"{name:10s} derived {d[0]}|{d[1]}  center {z[0]}|{z[1]}  XH1 {cohomology_dim(g, K, 1)}  XH2 {cohomology_dim(g, K, 2)}")
print()

# Compatible left-symmetric products on L^1_{1|1}, one per automorphism orbit.
g = load("L^1_{1|1}", F).algebra
for p in enumerate_compatible_products(g, "aut_orbits"):
    flag = "left-alternative" if is_left_alternative(p) else "not left-alternative"
    print(f"# {flag}")
    print(emit_product(p) or "# zero product\n", end="")
