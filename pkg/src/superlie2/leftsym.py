"""Left-symmetric and left-alternative products in characteristic 2.

A product is a tensor ``a[i, j]`` holding the vector e_i |> e_j.  It is
tied to a superspace (field, m, n) but not to any bracket.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimensionTooLarge,
    NotADerivation,
    NotCompatible,
    NotInvertible,
    NotLeftAlternative,
    NotLeftSymmetric,
    NotRotaBaxter,
)
from .field import GF2k
from .linalg import inverse, lincomb, nullspace, unit
from .report import VerificationReport
from .superalg import (
    LieSuperalgebra,
    Representation,
    RestrictedLieAlgebra,
    derivation_failures,
    gl_algebra,
    morphism_failures,
    natural_module,
    odd_test_vectors,
    parity_vector,
    queerify,
    semidirect,
    verify_lie,
    verify_representation,
)


class Product:
    def __init__(self, field: GF2k, m: int, n: int, table=None, names: Sequence[str] | None = None, name: str = ""):
        N = m + n
        self.field = field
        self.m, self.n = m, n
        a = np.zeros((N, N, N), dtype=np.int64) if table is None else np.array(table, dtype=np.int64)
        if a.shape != (N, N, N):
            raise ValueError(f"product table does not fit sdim ({m}|{n})")
        self.a = a
        self.a.setflags(write=False)
        self.names = list(names) if names is not None else [f"e{i + 1}" for i in range(N)]
        self.name = name
        self.parity = parity_vector(m, n)
        # left[i][:, j] = e_i |> e_j
        self.left = np.ascontiguousarray(np.transpose(a, (0, 2, 1)))

    @classmethod
    def like(cls, g: LieSuperalgebra, table=None, name: str = "") -> "Product":
        return cls(g.field, g.m, g.n, table, g.names, name)

    @property
    def dim(self) -> int:
        return self.m + self.n

    def left_mult(self, x) -> np.ndarray:
        return lincomb(self.field, np.asarray(x, dtype=np.int64), self.left)

    def mul(self, x, y) -> np.ndarray:
        return self.field.matmul(self.left_mult(x), np.asarray(y, dtype=np.int64))

    def is_zero(self) -> bool:
        return not self.a.any()

    def is_parity_additive(self) -> bool:
        P = self.parity
        bad = (self.a != 0) & (P[None, None, :] != (P[:, None, None] + P[None, :, None]) % 2)
        return not bad.any()

    def key(self) -> tuple:
        return tuple(self.a.reshape(-1).tolist())

    def __eq__(self, other) -> bool:
        return isinstance(other, Product) and self.field == other.field and np.array_equal(self.a, other.a)

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Product({self.name or describe(self)})"


def describe(p: Product) -> str:
    """Nonzero products as 'e1e1=e1; e1e2=e2'."""
    parts = []
    for i, j in itertools.product(range(p.dim), repeat=2):
        v = p.a[i, j]
        if v.any():
            terms = [p.names[k] if v[k] == 1 else f"{v[k]:x}*{p.names[k]}" for k in np.flatnonzero(v)]
            parts.append(f"{p.names[i]}{p.names[j]}=" + "+".join(terms))
    return "; ".join(parts) or "0"


def associator(p: Product, x, y, z) -> np.ndarray:
    """(x|>y)|>z + x|>(y|>z)."""
    return p.mul(p.mul(x, y), z) ^ p.mul(x, p.mul(y, z))


def _asso_tensor(p: Product) -> np.ndarray:
    """A[i, j, k] = Asso(e_i, e_j, e_k)."""
    F, N = p.field, p.dim
    A = np.zeros((N, N, N, N), dtype=np.int64)
    for i, j in itertools.product(range(N), repeat=2):
        Lij = p.left_mult(p.a[i, j])
        A[i, j] = (Lij ^ F.matmul(p.left[i], p.left[j])).T
    return A


def is_left_symmetric(p: Product) -> VerificationReport:
    F, N = p.field, p.dim
    rep = VerificationReport(subject="left-symmetric")
    A = _asso_tensor(p)
    for i, j in itertools.combinations(range(N), 2):
        for k in range(N):
            if not np.array_equal(A[i, j, k], A[j, i, k]):
                rep.fail("symmetric-associator", (p.names[i], p.names[j], p.names[k]))
    rep.count("symmetric-associator", N * N * (N - 1) // 2)
    for label, x in odd_test_vectors(N, list(range(p.m, N))):
        Lx = p.left_mult(x)
        lhs = F.matmul(Lx, Lx)
        rhs = p.left_mult(p.mul(x, x))
        for k in np.flatnonzero(np.any(lhs != rhs, axis=0)):
            rep.fail("odd-diagonal", (label, p.names[k]), "x|>(x|>y) != (x|>x)|>y")
        rep.count("odd-diagonal", N)
    return rep


def left_alternative_failures(p: Product) -> VerificationReport:
    F, N = p.field, p.dim
    rep = VerificationReport(subject="left-alternative")
    for label, x in odd_test_vectors(N, list(range(N))):
        Lx = p.left_mult(x)
        lhs = F.matmul(Lx, Lx)
        rhs = p.left_mult(p.mul(x, x))
        for k in np.flatnonzero(np.any(lhs != rhs, axis=0)):
            rep.fail("diagonal", (label, p.names[k]), "Asso(x,x,y) != 0")
        rep.count("diagonal", N)
    return rep


def is_left_alternative(p: Product) -> bool:
    return left_alternative_failures(p).ok


def _induced(p: Product) -> tuple[np.ndarray, np.ndarray]:
    N = p.dim
    c = p.a ^ np.transpose(p.a, (1, 0, 2))
    for i in range(N):
        c[i, i] = 0
    sq = np.zeros((N, N), dtype=np.int64)
    sq[p.m :] = p.a[np.arange(p.m, N), np.arange(p.m, N)]
    return c, sq


def lie_of_product(p: Product, check: bool = True) -> LieSuperalgebra:
    """[x,y] = x|>y + y|>x and s(x) = x|>x."""
    if check:
        rep = is_left_symmetric(p)
        if not rep.ok:
            raise NotLeftSymmetric(rep.summary())
    c, sq = _induced(p)
    g = LieSuperalgebra(p.field, p.m, p.n, c, sq, p.names, p.name)
    if check:
        rep = verify_lie(g)
        if not rep.ok:
            raise AssertionError(f"induced bracket of a left-symmetric product fails: {rep.summary()}")
    return g


def is_compatible(p: Product, g: LieSuperalgebra) -> bool:
    if p.field != g.field or (p.m, p.n) != (g.m, g.n):
        return False
    c, sq = _induced(p)
    if not (np.array_equal(c, g.c) and np.array_equal(sq[g.m :], g.sq[g.m :])):
        return False
    return is_left_symmetric(p).ok


# -- constructions ------------------------------------------------------------
def product_from_derivation(g: LieSuperalgebra, D) -> Product:
    """x |> y = D^{-1}[x, D y]."""
    F = g.field
    D = np.asarray(D, dtype=np.int64)
    rep = derivation_failures(g, D)
    if not rep.ok:
        raise NotADerivation(rep.summary())
    Dinv = inverse(F, D)
    if Dinv is None:
        raise NotInvertible("derivation is not invertible")
    N = g.dim
    a = np.zeros((N, N, N), dtype=np.int64)
    for i in range(N):
        # column j of ad_i D gives [e_i, D e_j]
        a[i] = F.matmul(Dinv, F.matmul(g.ad[i], D)).T
    p = Product.like(g, a)
    if not is_compatible(p, g):
        raise AssertionError("product from an invertible derivation is not compatible")
    return p


def _is_even_endo(parity, R) -> bool:
    P = np.asarray(parity)
    return not np.any((np.asarray(R) != 0) & (P[:, None] != P[None, :]))


def rota_baxter_check(g: LieSuperalgebra, R) -> VerificationReport:
    """[Rx,Ry] = R([Rx,y] + [x,Ry]) and s(Rx) = R([Rx,x])."""
    F = g.field
    R = np.asarray(R, dtype=np.int64)
    rep = VerificationReport(subject="Rota-Baxter")
    if not _is_even_endo(g.parity, R):
        rep.fail("even", ())
        return rep
    for i, j in itertools.combinations_with_replacement(range(g.dim), 2):
        x, y = g.e(i), g.e(j)
        lhs = g.bracket(R[:, i], R[:, j])
        rhs = F.matmul(R, g.bracket(R[:, i], y) ^ g.bracket(x, R[:, j]))
        if not np.array_equal(lhs, rhs):
            rep.fail("bracket", (g.names[i], g.names[j]))
    for label, x in odd_test_vectors(g.dim, list(g.odd_indices())):
        Rx = F.matmul(R, x)
        if not np.array_equal(g._square(Rx), F.matmul(R, g.bracket(Rx, x))):
            rep.fail("squaring", (label,))
    return rep


def o_operator_check(g: LieSuperalgebra, M: Representation, R) -> VerificationReport:
    """R: M -> g with [Rm,Rn] = R(R(m).n + R(n).m) and s(Rm) = R(R(m).m)."""
    F = g.field
    R = np.asarray(R, dtype=np.int64)
    rep = VerificationReport(subject="O-operator")
    if R.shape != (g.dim, M.dim):
        raise ValueError("O-operator must map M to g")
    P = np.asarray(M.parity)
    if np.any((R != 0) & (g.parity[:, None] != P[None, :])):
        rep.fail("even", ())
        return rep
    for i, j in itertools.combinations_with_replacement(range(M.dim), 2):
        lhs = g.bracket(R[:, i], R[:, j])
        rhs = F.matmul(R, M.act(R[:, i], unit(M.dim, j)) ^ M.act(R[:, j], unit(M.dim, i)))
        if not np.array_equal(lhs, rhs):
            rep.fail("bracket", (M.names[i], M.names[j]))
    for label, m in odd_test_vectors(M.dim, [k for k in range(M.dim) if P[k] == 1]):
        Rm = F.matmul(R, m)
        if not np.array_equal(g._square(Rm), F.matmul(R, M.act(Rm, m))):
            rep.fail("squaring", (label,))
    return rep


def product_from_rb(g: LieSuperalgebra, R) -> Product:
    """x |> y = [R(x), y] for a Rota-Baxter operator R."""
    rep = rota_baxter_check(g, R)
    if not rep.ok:
        raise NotRotaBaxter(rep.summary())
    R = np.asarray(R, dtype=np.int64)
    N = g.dim
    a = np.zeros((N, N, N), dtype=np.int64)
    for i in range(N):
        a[i] = g.ad_of(R[:, i]).T
    return Product.like(g, a)


def restricted_of_product(p: Product) -> RestrictedLieAlgebra:
    """Lie algebra of a purely even left-alternative product with x^[2] = x|>x."""
    c, _ = _induced(p)
    p2 = p.a[np.arange(p.dim), np.arange(p.dim)]
    return RestrictedLieAlgebra(p.field, c, p2, p.names, p.name)


def queerify_product(p: Product) -> Product:
    """Doubling V + Pi(V) of a purely even left-alternative product."""
    if p.n:
        raise ValueError("queerification needs a purely even product")
    rep = left_alternative_failures(p)
    if not rep.ok:
        f = rep.failures[0]
        raise NotLeftAlternative(f"not left-alternative at {f}", witness=f)
    n = p.m
    a = np.zeros((2 * n, 2 * n, 2 * n), dtype=np.int64)
    a[:n, :n, :n] = p.a  # x |> y
    a[:n, n:, n:] = p.a  # x |> Py = P(x |> y)
    a[n:, :n, n:] = p.a  # Px |> y = P(x |> y)
    a[n:, n:, :n] = p.a  # Px |> Py = x |> y
    names = list(p.names) + [f"P{nm}" for nm in p.names]
    return Product(p.field, n, n, a, names, f"q({p.name})" if p.name else "")


# -- affine embedding -----------------------------------------------------------
@dataclass
class AffineEmbedding:
    target: LieSuperalgebra  # gl(g) semidirect g, even-first
    psi: np.ndarray  # target.dim x g.dim
    representation: Representation  # on g + K
    report: VerificationReport


def affine_embedding(g: LieSuperalgebra, p: Product) -> AffineEmbedding:
    if not is_compatible(p, g):
        raise NotCompatible("product is not a compatible left-symmetric structure")
    F, N = g.field, g.dim
    gl, pairs = gl_algebra(F, list(g.parity))
    nat = natural_module(gl, pairs, list(g.parity))
    target, perm = semidirect(gl, nat, check=False)
    old = np.zeros((gl.dim + N, N), dtype=np.int64)
    for i in range(N):
        for t, (r, c) in enumerate(pairs):
            old[t, i] = p.left[i][r, c]
        old[gl.dim + i, i] = 1
    psi = old[perm]
    rep = morphism_failures(g, target, psi)
    rep.subject = "affine embedding"
    # pi(x)(m, lam) = (l_x m + lam x, 0)
    rho = np.zeros((N, N + 1, N + 1), dtype=np.int64)
    for i in range(N):
        rho[i, :N, :N] = p.left[i]
        rho[i, i, N] = 1
    rep_mod = Representation(g, list(g.parity) + [0], rho, list(g.names) + ["1"], label="affine")
    rep.merge(verify_representation(g, rep_mod))
    kernel = nullspace(F, rho.reshape(N, -1).T, N)
    if kernel.dim:
        rep.fail("faithful", (kernel.dim,))
    return AffineEmbedding(target, psi, rep_mod, rep)


# -- enumeration ------------------------------------------------------------------
def _check_enum_size(F: GF2k, N: int) -> None:
    limit = {1: 3, 2: 2}.get(F.k, 0)
    if N > limit:
        raise DimensionTooLarge(f"product enumeration limited to total dim {limit} over GF(2^{F.k})")


def compatible_product_slots(g: LieSuperalgebra) -> list[tuple[int, int, int]]:
    """Free coordinates (i, j, k) once compatibility pins the rest."""
    P = g.parity
    N = g.dim
    slots = []
    for i in range(N):
        for j in range(i, N):
            if i == j and P[i] == 1:
                continue
            for k in range(N):
                if P[k] == (P[i] + P[j]) % 2:
                    slots.append((i, j, k))
    return slots


def _product_from_slots(g: LieSuperalgebra, slots, vals) -> np.ndarray:
    N = g.dim
    a = np.zeros((N, N, N), dtype=np.int64)
    for i in g.odd_indices():
        a[i, i] = g.sq[i]
    for (i, j, k), v in zip(slots, vals):
        a[i, j, k] = v
    for i, j in itertools.combinations(range(N), 2):
        a[j, i] = a[i, j] ^ g.c[i, j]
    return a


def transport(p: Product, phi, phi_inv) -> np.ndarray:
    """Table of phi^{-1}(phi(x) |> phi(y))."""
    F, N = p.field, p.dim
    a = np.zeros((N, N, N), dtype=np.int64)
    for i, j in itertools.product(range(N), repeat=2):
        a[i, j] = F.matmul(phi_inv, p.mul(phi[:, i], phi[:, j]))
    return a


def enumerate_compatible_products(g: LieSuperalgebra, up_to: str = "raw") -> list[Product]:
    from .iso import automorphisms

    F = g.field
    _check_enum_size(F, g.dim)
    slots = compatible_product_slots(g)
    found = []
    for vals in itertools.product(F.elements(), repeat=len(slots)):
        p = Product.like(g, _product_from_slots(g, slots, vals))
        if is_left_symmetric(p).ok:
            found.append(p)
    if up_to == "raw":
        return found
    if up_to != "aut_orbits":
        raise ValueError("up_to must be 'raw' or 'aut_orbits'")
    auts = [(phi, inverse(F, phi)) for phi in automorphisms(g)]
    seen: set[tuple] = set()
    reps: dict[tuple, Product] = {}
    for p in found:
        if p.key() in seen:
            continue
        orbit = {tuple(transport(p, phi, inv).reshape(-1).tolist()) for phi, inv in auts}
        seen |= orbit
        least = min(orbit)
        reps[least] = Product.like(g, np.array(least, dtype=np.int64).reshape(p.a.shape))
    return [reps[k] for k in sorted(reps)]


def orbit_of(g: LieSuperalgebra, p: Product) -> set[tuple]:
    from .iso import automorphisms

    F = g.field
    return {tuple(transport(p, phi, inverse(F, phi)).reshape(-1).tolist()) for phi in automorphisms(g)}


def products_isomorphic(g: LieSuperalgebra, p: Product, q: Product) -> bool:
    return q.key() in orbit_of(g, p)
