"""Bilinear forms on superspaces in characteristic 2.

A form is stored by its Gram matrix ``gram[i, j] = w(e_i, e_j)`` in the
algebra's even-first basis.  Closedness, orthogonals and polarizations are
all linear-algebra computations on that matrix.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooLarge, QuasiFrobeniusViolation
from .linalg import Subspace, enumerate_subspaces, nullspace, rank, span_combinations
from .report import VerificationReport
from .superalg import LieSuperalgebra, is_ideal, odd_test_vectors


class BilinearForm:
    def __init__(self, gram, parity_vector):
        self.gram = np.array(gram, dtype=np.int64)
        self.parity_vector = np.asarray(parity_vector, dtype=np.int64)
        N = len(self.parity_vector)
        if self.gram.shape != (N, N):
            raise ValueError("Gram matrix does not match the superspace")

    @classmethod
    def on(cls, g: LieSuperalgebra, gram) -> "BilinearForm":
        return cls(gram, g.parity)

    @property
    def dim(self) -> int:
        return len(self.parity_vector)

    @property
    def parity(self) -> int | None:
        """0 (even), 1 (odd) or None when the Gram matrix mixes both; zero counts as even."""
        P = self.parity_vector
        mixed = (P[:, None] + P[None, :]) % 2
        support = set(mixed[self.gram != 0].tolist())
        if not support:
            return 0
        return support.pop() if len(support) == 1 else None

    def value(self, F, x, y) -> int:
        return int(F.dot(F.matmul(np.asarray(x, dtype=np.int64), self.gram), np.asarray(y, dtype=np.int64)))

    def kernel(self, F) -> Subspace:
        return nullspace(F, self.gram.T, self.dim)

    def is_nondegenerate(self, F) -> bool:
        return rank(F, self.gram) == self.dim

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearForm) and np.array_equal(self.gram, other.gram) and np.array_equal(
            self.parity_vector, other.parity_vector
        )

    def __repr__(self) -> str:
        return f"BilinearForm(parity={self.parity}, gram={self.gram.tolist()})"


@dataclass
class FormClass:
    kind: str  # ortho-orthogonal | periplectic | inhomogeneous
    o_antisymmetric: bool
    even_rule: bool  # symmetric on equal parities and w(x,x)=0 on evens
    odd_rule: bool  # symmetric


def _even_rule(w: BilinearForm) -> bool:
    G, P = w.gram, w.parity_vector
    same = P[:, None] == P[None, :]
    sym = np.array_equal(G[same], G.T[same])
    return sym and not np.any(np.diag(G)[P == 0])


def _odd_rule(w: BilinearForm) -> bool:
    return np.array_equal(w.gram, w.gram.T)


def classify_form(w: BilinearForm) -> FormClass:
    par = w.parity
    ev, od = _even_rule(w), _odd_rule(w)
    if par == 0:
        return FormClass("ortho-orthogonal", ev, ev, od)
    if par == 1:
        return FormClass("periplectic", od, ev, od)
    return FormClass("inhomogeneous", False, ev, od)


def is_closed(g: LieSuperalgebra, w: BilinearForm) -> VerificationReport:
    """Cyclic condition on basis triples and w(s(x),y) = w(x,[x,y]) on odd tests."""
    F = g.field
    G = w.gram
    rep = VerificationReport(subject="closedness")
    N = g.dim

    def val(x, y):
        return int(F.dot(F.matmul(x, G), y))

    for i, j, k in itertools.combinations(range(N), 3):
        s = val(g.c[i, j], g.e(k)) ^ val(g.c[j, k], g.e(i)) ^ val(g.c[k, i], g.e(j))
        if s:
            rep.fail("cyclic", (g.names[i], g.names[j], g.names[k]))
    rep.count("cyclic", N * (N - 1) * (N - 2) // 6)
    for label, x in odd_test_vectors(N, list(g.odd_indices())):
        sx = g._square(x)
        for j in range(N):
            if val(sx, g.e(j)) != val(x, g.bracket(x, g.e(j))):
                rep.fail("squaring", (label, g.names[j]), "w(s(x),y) != w(x,[x,y])")
        rep.count("squaring", N)
    return rep


# -- closed forms -----------------------------------------------------------
@dataclass
class FormSpace:
    """Closed o-antisymmetric forms as a subspace of Gram coordinates."""

    g: LieSuperalgebra
    coords: list  # (i, j) with i <= j; each coordinate sets gram[i,j] = gram[j,i]
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def form(self, vec) -> BilinearForm:
        G = np.zeros((self.g.dim, self.g.dim), dtype=np.int64)
        for (i, j), c in zip(self.coords, vec):
            G[i, j] = G[j, i] = c
        return BilinearForm.on(self.g, G)

    def forms(self) -> list[BilinearForm]:
        return [self.form(v) for v in self.space.basis]

    def labels(self) -> list[str]:
        """Readable names of the basis forms, e.g. e1*^e2* for w(e1,e2)=w(e2,e1)=1."""
        out = []
        names = self.g.names
        for v in self.space.basis:
            terms = []
            for (i, j), c in zip(self.coords, v):
                if c:
                    t = f"{names[i]}*^{names[j]}*" if i != j else f"{names[i]}*.{names[i]}*"
                    terms.append(t if c == 1 else f"{c:x}*{t}")
            out.append(" + ".join(terms))
        return out


def _coords(g: LieSuperalgebra, parity: int | None) -> list[tuple[int, int]]:
    P = g.parity
    out = []
    for i in range(g.dim):
        for j in range(i, g.dim):
            p = (P[i] + P[j]) % 2
            if parity is not None and p != parity:
                continue
            if i == j and P[i] == 0:
                continue  # w(x,x) = 0 for even x
            out.append((i, j))
    return out


def closed_form_space(g: LieSuperalgebra, parity: int | None = None) -> FormSpace:
    """Closed o-antisymmetric forms; both parities unless one is requested."""
    F = g.field
    coords = _coords(g, parity)
    cols = []
    for t in range(len(coords)):
        G = np.zeros((g.dim, g.dim), dtype=np.int64)
        i, j = coords[t]
        G[i, j] = G[j, i] = 1
        cols.append(_closed_conditions(g, G))
    if not coords:
        return FormSpace(g, coords, Subspace(F, 0))
    M = np.stack(cols, axis=1)
    return FormSpace(g, coords, nullspace(F, M, len(coords)))


def _closed_conditions(g: LieSuperalgebra, G) -> np.ndarray:
    F = g.field
    N = g.dim
    out = []

    def val(x, y):
        return int(F.dot(F.matmul(x, G), y))

    for i, j, k in itertools.combinations(range(N), 3):
        out.append(val(g.c[i, j], g.e(k)) ^ val(g.c[j, k], g.e(i)) ^ val(g.c[k, i], g.e(j)))
    for _, x in odd_test_vectors(N, list(g.odd_indices())):
        sx = g._square(x)
        for j in range(N):
            out.append(val(sx, g.e(j)) ^ val(x, g.bracket(x, g.e(j))))
    return np.array(out, dtype=np.int64)


def homogeneous_nondegenerate(fs: FormSpace) -> list[BilinearForm]:
    """All non-degenerate forms of fs lying in a single parity."""
    F = fs.g.field
    found = []
    P = fs.g.parity
    for par in (0, 1):
        keep = [t for t, (i, j) in enumerate(fs.coords) if (P[i] + P[j]) % 2 == par]
        sub = fs.space.intersection(_coordinate_subspace(F, len(fs.coords), keep))
        for v in span_combinations(F, sub.basis):
            w = fs.form(v)
            if v.any() and w.is_nondegenerate(F):
                found.append(w)
    return found


def _coordinate_subspace(F, n: int, keep: list[int]) -> Subspace:
    B = np.zeros((len(keep), n), dtype=np.int64)
    B[np.arange(len(keep)), keep] = 1
    return Subspace(F, n, B)


def orthogonal(F, w: BilinearForm, s: Subspace) -> Subspace:
    """{x : w(x, v) = 0 for all v in s}."""
    if s.dim == 0:
        return Subspace.full(F, w.dim)
    M = F.matmul(s.basis, w.gram.T)  # row r: x -> w(x, v_r)
    return nullspace(F, M, w.dim)


# -- polarizations -----------------------------------------------------------
@dataclass
class StrongPolarization:
    g: LieSuperalgebra
    form: BilinearForm
    lagrangian_ideal: Subspace
    complement: Subspace

    def check(self) -> VerificationReport:
        F = self.g.field
        rep = VerificationReport(subject="strong polarization")
        a, n = self.lagrangian_ideal, self.complement
        if orthogonal(F, self.form, a) != a:
            rep.fail("lagrangian-ideal", ())
        if orthogonal(F, self.form, n) != n:
            rep.fail("lagrangian-complement", ())
        if a.intersection(n).dim or a.dim + n.dim != self.g.dim:
            rep.fail("direct-sum", ())
        if not is_ideal(self.g, a):
            rep.fail("ideal", ())
        return rep


def _check_polarization_size(F, N: int) -> None:
    limit = {1: 8, 2: 4}.get(F.k, 2)
    if N > limit:
        raise DimensionTooLarge(f"polarization search limited to total dim {limit} over GF(2^{F.k})")


def homogeneous_subspaces(g: LieSuperalgebra, k: int):
    """Every homogeneous k-dim subspace, as a Subspace, in a fixed order."""
    F = g.field
    m, n = g.m, g.n
    for k0 in range(min(k, m), -1, -1):
        k1 = k - k0
        if k1 > n:
            continue
        for A in enumerate_subspaces(F, m, k0):
            for B in enumerate_subspaces(F, n, k1):
                rows = np.zeros((k, g.dim), dtype=np.int64)
                rows[:k0, :m] = A
                rows[k0:, m:] = B
                yield Subspace(F, g.dim, rows)


def lagrangian_ideals(g: LieSuperalgebra, w: BilinearForm) -> list[Subspace]:
    F = g.field
    if g.dim % 2:
        return []
    return [
        a
        for a in homogeneous_subspaces(g, g.dim // 2)
        if orthogonal(F, w, a) == a and is_ideal(g, a)
    ]


def find_strong_polarizations(g: LieSuperalgebra, w: BilinearForm) -> list[StrongPolarization]:
    F = g.field
    if w.parity is None:
        raise QuasiFrobeniusViolation("form is not homogeneous")
    if not is_closed(g, w).ok:
        raise QuasiFrobeniusViolation("form is not closed")
    if not w.is_nondegenerate(F):
        raise QuasiFrobeniusViolation("form is degenerate")
    _check_polarization_size(F, g.dim)
    out = []
    half = g.dim // 2
    ideals = lagrangian_ideals(g, w)
    if not ideals:
        return out
    lagrangians = [s for s in homogeneous_subspaces(g, half) if orthogonal(F, w, s) == s]
    for a in ideals:
        for s in lagrangians:
            if a.intersection(s).dim == 0:
                out.append(StrongPolarization(g, w, a, s))
    return out


def is_abelian_subspace(g: LieSuperalgebra, s: Subspace) -> bool:
    for u, v in itertools.combinations_with_replacement(s.basis, 2):
        if g.bracket(u, v).any():
            return False
    odd = [i for i, v in enumerate(s.basis) if not v[: g.m].any()]
    for _, x in odd_test_vectors(s.dim, odd):
        if g._square(g.field.matmul(x, s.basis)).any():
            return False
    return True
