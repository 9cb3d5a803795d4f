"""Two constructions around left-symmetric products: queerification of a
left-alternative product, and post-Lie data of a flat parallel connection.

Run: python3 demos/04_queerify_and_post_lie.py
"""
import numpy as np

from superlie2.catalog import load
from superlie2.connections import Connection, associated_lie, post_lie_from_flat_parallel
from superlie2.field import gf
from superlie2.leftsym import Product, is_left_symmetric, lie_of_product, queerify_product, restricted_of_product
from superlie2.superalg import queerify
from superlie2.textfmt import emit_algebra, emit_product

F = gf(1)

# The 2-dim product e1|>e1 = e1, e1|>e2 = e2 is left-alternative.
a = np.zeros((2, 2, 2), dtype=np.int64)
a[0, 0, 0] = a[0, 1, 1] = 1
p = Product(F, 2, 0, a)
q = queerify_product(p)
print("queerified product, left-symmetric:", is_left_symmetric(q).ok)
print(emit_product(q), end="")
# Doubling the product and doubling its restricted Lie algebra agree.
same = lie_of_product(q).same_structure(queerify(restricted_of_product(p)))
print("Lie(q(p)) == q(restricted(p)):", same)
print(emit_algebra(lie_of_product(q)))

# The zero connection is flat and parallel; its torsion is the bracket itself,
# and the associated bracket of the post-Lie data gives the algebra back.
g = load("L^1_{1|1}", F).algebra
pl = post_lie_from_flat_parallel(g, Connection(g, np.zeros((2, 2, 2), dtype=np.int64)))
print("associated Lie algebra equals L^1_{1|1}:", associated_lie(pl).same_structure(g))
