"""The Hamiltonian superalgebra on four odd indeterminates and its derivation D.

Basis: the 15 nonconstant monomials in xi1, xi2, eta1, eta2, with parity
equal to the degree mod 2.  The bracket is the Poisson bracket

    {f, g} = sum_i df/dxi_i dg/deta_i + df/deta_i dg/dxi_i

(no signs in characteristic 2), taken modulo constants; the squaring is
zero on monomials.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..field import GF2k, gf
from ..linalg import Subspace, inverse, rank
from ..report import VerificationReport
from ..superalg import (
    LieSuperalgebra,
    algebra_from_parities,
    derivation_failures,
    derived_subalgebra,
    restrict_to_subalgebra,
    verify_lie,
)

VARS = ("xi1", "xi2", "eta1", "eta2")
_PAIRS = ((0, 2), (2, 0), (1, 3), (3, 1))  # (d/dxi_i, d/deta_i) and the swap

# D as a list of (image, preimage) monomials: "a (x) b*" sends b to a
D_TERMS = {
    "D2": [("xi1", "eta1"), ("xi1 xi2", "xi2 eta1"), ("xi1 eta2", "eta1 eta2"), ("xi1 xi2 eta2", "xi2 eta1 eta2")],
    "D3": [("xi2", "eta2"), ("xi1 xi2", "xi1 eta2"), ("xi2 eta1", "eta1 eta2"), ("xi1 xi2 eta1", "xi1 eta1 eta2")],
    "D5": [("eta2", "xi2"), ("xi1 eta2", "xi1 xi2"), ("eta1 eta2", "xi2 eta1"), ("xi1 eta1 eta2", "xi1 xi2 eta1")],
    "D7": [("xi1 xi2 eta1", "xi2"), ("xi1 xi2 eta2", "xi1"), ("xi1 eta1 eta2", "eta2"), ("xi2 eta1 eta2", "eta1")],
}
AD_OF = "eta1 + eta2"


def monomials() -> list[frozenset]:
    return [frozenset(s) for r in range(1, 5) for s in itertools.combinations(range(4), r)]


def mono_name(m) -> str:
    return "".join(VARS[k] for k in sorted(m))


def poisson(A: frozenset, B: frozenset) -> dict[frozenset, int]:
    out: dict[frozenset, int] = {}
    for a, b in _PAIRS:
        if a in A and b in B:
            R, S = A - {a}, B - {b}
            if R & S or not (R | S):
                continue  # exterior product vanishes, or a constant
            out[R | S] = out.get(R | S, 0) ^ 1
    return out


def hamiltonian_algebra(F: GF2k | None = None) -> LieSuperalgebra:
    F = F or gf(1)
    ms = monomials()
    N = len(ms)
    C = np.zeros((N, N, N), dtype=np.int64)
    for i, j in itertools.product(range(N), repeat=2):
        for U, v in poisson(ms[i], ms[j]).items():
            C[i, j, ms.index(U)] ^= v
    parity = [len(m) % 2 for m in ms]
    g, _ = algebra_from_parities(F, parity, C, np.zeros((N, N), dtype=np.int64), [mono_name(m) for m in ms], "h_Pi(0|4)")
    return g


def _index(g: LieSuperalgebra, words: str) -> int:
    parts = sorted(words.split(), key=VARS.index)
    return list(g.names).index("".join(parts))


@dataclass
class Hamiltonian:
    h: LieSuperalgebra
    derived: Subspace
    h1: LieSuperalgebra  # derived algebra in its own basis
    D: np.ndarray  # on h
    D1: np.ndarray  # restricted to h1
    report: VerificationReport
    kernel_dim: int
    product: object | None


def build_hamiltonian(F: GF2k | None = None) -> Hamiltonian:
    """Assemble D = D2+D3+D5+D7+ad(eta1+eta2), restrict to h^(1) and check it.

    The report records: Lie axioms, D preserves h^(1), D is a derivation,
    D is invertible, and the induced product x |> y = D^-1[x, D y] is
    left-symmetric.  Failures are recorded, not raised.
    """
    from ..leftsym import is_left_symmetric, product_from_derivation

    F = F or gf(1)
    h = hamiltonian_algebra(F)
    N = h.dim
    rep = VerificationReport(subject="hamiltonian")
    rep.merge(verify_lie(h))
    D = np.zeros((N, N), dtype=np.int64)
    for terms in D_TERMS.values():
        for img, pre in terms:
            D[_index(h, img), _index(h, pre)] ^= 1
    z = np.zeros(N, dtype=np.int64)
    for w in AD_OF.split("+"):
        z[_index(h, w)] ^= 1
    D ^= h.ad_of(z)
    der = derived_subalgebra(h)
    B = der.basis
    if not all(der.contains(F.matmul(D, b)) for b in B):
        rep.fail("preserves-derived", ())
    h1, _ = restrict_to_subalgebra(h, der, "h^(1)_Pi(0|4)")
    D1 = np.array([der.coordinates(F.matmul(D, b)) for b in B], dtype=np.int64).T
    rep.merge(derivation_failures(h1, D1))
    r = rank(F, D1)
    if inverse(F, D1) is None:
        rep.fail("invertible", (), f"rank {r} < {h1.dim}")
    product = None
    if rep.ok:
        product = product_from_derivation(h1, D1)
        rep.merge(is_left_symmetric(product))
    else:
        rep.fail("left-symmetric", (), "no product without an invertible derivation")
    return Hamiltonian(h, der, h1, D, D1, rep, h1.dim - r, product)
