"""Lagrangian extensions of flat torsion-free Lie superalgebras.

Given (h, nabla) with nabla flat and torsion-free, h acts on h* by
rho(x)(xi) = xi o nabla_x.  A Lagrangian 2-cocycle (alpha, gamma) with
values in h* (or in the parity-shifted copy) defines a bracket on
h + h* whose canonical pairing is closed, and every quasi-Frobenius
algebra with a strong polarization arises this way.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cohomology import Cochain2, Layout1, Layout2, d1, d1_matrix, d2, d2_matrix, _parity_rows
from .connections import Connection, is_flat, is_torsion_free
from .errors import BaseMismatch, NotFlat, NotLagrangianCocycle
from .forms import BilinearForm, StrongPolarization, classify_form, is_closed, orthogonal
from .linalg import Subspace, inverse, nullspace, solve, unit
from .report import VerificationReport
from .superalg import (
    LieSuperalgebra,
    Representation,
    algebra_from_parities,
    is_ideal,
    morphism_failures,
    odd_test_vectors,
    verify_lie,
    verify_representation,
)

KINDS = ("even", "odd")


@dataclass
class FlatLieSuperalgebra:
    h: LieSuperalgebra
    nabla: Connection
    require_torsion_free: bool = True

    def __post_init__(self):
        if not is_flat(self.h, self.nabla):
            raise NotFlat("connection is not flat")
        if self.require_torsion_free and not is_torsion_free(self.h, self.nabla):
            raise NotFlat("connection is not torsion-free")

    def same_as(self, other: "FlatLieSuperalgebra") -> bool:
        return self.h.same_structure(other.h) and np.array_equal(self.nabla.nabla, other.nabla.nabla)


def dual_module(fh: FlatLieSuperalgebra, kind: str = "even") -> Representation:
    """rho on h* (kind 'even') or chi on Pi(h*) (kind 'odd').

    The matrix of rho(e_i) in the dual basis is the transpose of nabla_{e_i};
    chi uses the same matrices with every parity flipped.
    """
    if kind not in KINDS:
        raise ValueError("kind must be 'even' or 'odd'")
    h = fh.h
    rho = np.transpose(fh.nabla.nabla, (0, 2, 1)).copy()
    if kind == "even":
        parity, names = list(h.parity), [f"{n}*" for n in h.names]
    else:
        parity, names = [1 - p for p in h.parity], [f"P{n}*" for n in h.names]
    r = Representation(h, parity, rho, names, label="h*" if kind == "even" else "P(h*)")
    rep = verify_representation(h, r)
    if not rep.ok:
        raise NotFlat(f"dual action is not a representation: {rep.summary()}")
    return r


def dual_reps(fh: FlatLieSuperalgebra) -> tuple[Representation, Representation]:
    return dual_module(fh, "even"), dual_module(fh, "odd")


# -- Lagrangian conditions --------------------------------------------------------
def lagrangian_failures(h: LieSuperalgebra, c: Cochain2) -> VerificationReport:
    """Cyclic alpha(x,y)(z) sum and gamma(x)(y) + alpha(x,y)(x) on odd tests."""
    F = h.field
    rep = VerificationReport(subject="Lagrangian conditions")
    A = c.alpha
    for i, j, k in itertools.combinations(range(h.dim), 3):
        if A[i, j, k] ^ A[j, k, i] ^ A[k, i, j]:
            rep.fail("cyclic", (h.names[i], h.names[j], h.names[k]))
    for label, x in odd_test_vectors(h.dim, list(h.odd_indices())):
        gx = c.gamma_eval(x)
        for j in range(h.dim):
            if gx[j] ^ F.dot(c.alpha_eval(x, h.e(j)), x):
                rep.fail("gamma-alpha", (label, h.names[j]), "gamma(x)(y) + alpha(x,y)(x) != 0")
    return rep


def _lagrangian_rows(h: LieSuperalgebra, r: Representation) -> np.ndarray:
    lay = Layout2(h, r)
    cols = []
    for t in range(lay.size):
        c = lay.decode(unit(lay.size, t))
        A = c.alpha
        vals = [A[i, j, k] ^ A[j, k, i] ^ A[k, i, j] for i, j, k in itertools.combinations(range(h.dim), 3)]
        for _, x in odd_test_vectors(h.dim, list(h.odd_indices())):
            gx = c.gamma_eval(x)
            vals += [gx[j] ^ h.field.dot(c.alpha_eval(x, h.e(j)), x) for j in range(h.dim)]
        cols.append(np.array(vals, dtype=np.int64))
    if not cols:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def symmetric_cochains(h: LieSuperalgebra, r: Representation, parity: int | None = None) -> np.ndarray:
    """Layout1 vectors of the symmetric 1-cochains psi(x)(y) = psi(y)(x)."""
    l1 = Layout1(h, r)
    N = h.dim
    out = []
    for i in range(N):
        for k in range(i, N):
            v = np.zeros(l1.size, dtype=np.int64)
            v[i * N + k] = 1
            v[k * N + i] = 1
            if parity is not None and l1.parity[i * N + k] != parity:
                continue
            out.append(v)
    return np.array(out, dtype=np.int64).reshape(-1, l1.size)


@dataclass
class LagrangianCohomology:
    kind: str
    module: Representation
    layout: Layout2
    cocycles: Subspace  # XZ^2_L
    coboundaries: Subspace  # d(XC^1_L)
    representatives: np.ndarray

    @property
    def dim(self) -> int:
        return self.cocycles.dim - self.coboundaries.dim

    def classes(self) -> list[Cochain2]:
        return [self.layout.decode(v) for v in self.representatives]

    def contains(self, c: Cochain2) -> bool:
        return self.cocycles.contains(self.layout.encode(c))

    def is_coboundary(self, c: Cochain2) -> bool:
        return self.coboundaries.contains(self.layout.encode(c))

    def spans_same_classes(self, cochains: list[Cochain2]) -> bool:
        """True iff the given cocycles form a basis of XH^2_L."""
        if not all(self.contains(c) for c in cochains):
            return False
        vecs = [self.layout.encode(c) for c in cochains]
        total = self.coboundaries
        if vecs:
            total = total.sum(Subspace(self.cocycles.field, self.layout.size, np.array(vecs)))
        return total == self.cocycles and len(vecs) == self.dim


def lagrangian_cocycle_space(fh: FlatLieSuperalgebra, kind: str = "even", parity: int | None = None) -> LagrangianCohomology:
    """XZ^2_L and XH^2_L; both cochain parities unless one is requested."""
    h = fh.h
    F = h.field
    r = dual_module(fh, kind)
    lay = Layout2(h, r)
    M = np.concatenate([d2_matrix(h, r), _lagrangian_rows(h, r), _parity_rows(lay, parity)])
    Z = nullspace(F, M, lay.size)
    S = symmetric_cochains(h, r, parity)
    D = d1_matrix(h, r)
    B = Subspace(F, lay.size, F.matmul(D, S.T).T if S.shape[0] else None)
    if not Z.contains(B):
        if is_torsion_free(h, fh.nabla):
            raise AssertionError("Lagrangian coboundaries are not Lagrangian cocycles")
        # with torsion, d(sigma) need not be Lagrangian: keep the part that is
        B = Z.intersection(B)
    return LagrangianCohomology(kind, r, lay, Z, B, Z.complement_representatives(B))


# -- extensions -----------------------------------------------------------------------
@dataclass
class ExtensionTuple:
    base: FlatLieSuperalgebra
    cocycle: Cochain2
    kind: str = "even"

    def check(self) -> None:
        h, c = self.base.h, self.cocycle
        if c.r.parity.tolist() != dual_module(self.base, self.kind).parity.tolist():
            raise NotLagrangianCocycle("cocycle module does not match the extension kind", "module")
        if c.parity() not in (0,):
            raise NotLagrangianCocycle("cocycle is not even", "parity")
        table = d2(h, c.r, c)
        if not table.is_zero:
            raise NotLagrangianCocycle("not a 2-cocycle", "cocycle", table.witnesses(h))
        rep = lagrangian_failures(h, c)
        if not rep.ok:
            f = rep.failures[0]
            raise NotLagrangianCocycle(f"Lagrangian condition fails: {f}", f.identity, f.where)


def cochain(fh: FlatLieSuperalgebra, kind: str, alpha: dict | None = None, gamma: dict | None = None) -> Cochain2:
    """Cochain from {(i, j): covector} and {i: covector} with 0-based indices."""
    r = dual_module(fh, kind)
    c = Cochain2.zero(fh.h, r)
    for (i, j), v in (alpha or {}).items():
        c.alpha[i, j] = c.alpha[j, i] = v
    for i, v in (gamma or {}).items():
        c.gamma[i] = v
    return c


@dataclass
class Extension:
    g: LieSuperalgebra
    form: BilinearForm
    polarization: StrongPolarization
    perm: list  # new index t holds old index perm[t]; old = h basis then dual basis
    source: ExtensionTuple

    def old_to_new(self) -> np.ndarray:
        """Matrix taking old (h, dual) coordinates to the algebra's basis."""
        n = len(self.perm)
        P = np.zeros((n, n), dtype=np.int64)
        for t, o in enumerate(self.perm):
            P[t, o] = 1
        return P


def build_extension(t: ExtensionTuple) -> Extension:
    t.check()
    h, c, r = t.base.h, t.cocycle, t.cocycle.r
    F = h.field
    N = h.dim
    M = 2 * N
    C = np.zeros((M, M, M), dtype=np.int64)
    S = np.zeros((M, M), dtype=np.int64)
    C[:N, :N, :N] = h.c
    C[:N, :N, N:] = c.alpha
    for i in range(N):
        for k in range(N):
            col = r.rho[i][:, k]
            C[i, N + k, N:] = col
            C[N + k, i, N:] = col
    for i in h.odd_indices():
        S[i, :N] = h.sq[i]
        S[i, N:] = c.gamma[i]
    parity = list(h.parity) + list(r.parity)
    names = list(h.names) + list(r.names)
    label = ("T*" if t.kind == "even" else "PT*") + (f"({h.name})" if h.name else "")
    g, perm = algebra_from_parities(F, parity, C, S, names, label)
    G = np.zeros((M, M), dtype=np.int64)
    for i in range(N):
        G[i, N + i] = G[N + i, i] = 1
    G = G[np.ix_(perm, perm)]
    w = BilinearForm.on(g, G)
    inv = {o: n for n, o in enumerate(perm)}
    a = Subspace(F, M, np.array([unit(M, inv[N + k]) for k in range(N)]))
    n = Subspace(F, M, np.array([unit(M, inv[i]) for i in range(N)]))
    pol = StrongPolarization(g, w, a, n)
    rep = verify_lie(g)
    rep.merge(is_closed(g, w))
    rep.merge(pol.check())
    if not w.is_nondegenerate(F):
        rep.fail("nondegenerate", ())
    fc = classify_form(w)
    if not fc.o_antisymmetric or fc.kind != ("ortho-orthogonal" if t.kind == "even" else "periplectic"):
        rep.fail("form-type", (fc.kind,))
    if not rep.ok:
        raise AssertionError(f"extension fails its own checks: {rep.summary()}")
    return Extension(g, w, pol, perm, t)


@dataclass
class Extracted:
    tuple: ExtensionTuple
    h_basis: np.ndarray  # rows: lifts of the h basis (basis of N)
    a_basis: np.ndarray  # rows: basis of the Lagrangian ideal
    phi: np.ndarray | None  # g -> extension (its even-first basis), the p_h + i_w map
    extension: Extension | None  # None for a torsioned connection
    report: VerificationReport


def extract_tuple(p: StrongPolarization, name: str = "", allow_torsion: bool = False) -> Extracted:
    """Recover (h, nabla, alpha, gamma) from a strongly polarized algebra.

    With allow_torsion the induced connection is returned even if torsioned;
    the extension step is then skipped and the isomorphism report is empty.
    """
    g, w = p.g, p.form
    F = g.field
    G = w.gram
    rep = p.check()
    if not rep.ok:
        raise ValueError(f"not a strong polarization: {rep.summary()}")
    Nb = p.complement.basis
    Ab = p.lagrangian_ideal.basis
    d = Nb.shape[0]
    Binv = inverse(F, np.concatenate([Nb, Ab]))  # v = coeffs @ [N; a]  =>  coeffs = v @ Binv

    def split(v):
        co = F.matmul(np.asarray(v, dtype=np.int64), Binv)
        return co[:d], co[d:]

    def wv(x, y):
        return int(F.dot(F.matmul(x, G), y))

    # quotient structure carried by N
    m = sum(1 for row in Nb if not row[g.m :].any())
    hc = np.zeros((d, d, d), dtype=np.int64)
    hs = np.zeros((d, d), dtype=np.int64)
    for i, j in itertools.product(range(d), repeat=2):
        hc[i, j] = split(g.bracket(Nb[i], Nb[j]))[0]
    for i in range(m, d):
        hs[i] = split(g._square(Nb[i]))[0]
    hnames = _lift_names(g, Nb)
    h = LieSuperalgebra(F, m, d - m, hc, hs, hnames, name)
    # pairing P[b, t] = w(n_b, a_t); nabla_u v solves w(nabla_u v, a) = w(v, [u, a])
    P = np.array([[wv(Nb[b], Ab[t]) for t in range(d)] for b in range(d)], dtype=np.int64)
    Pinv = inverse(F, P)
    nab = np.zeros((d, d, d), dtype=np.int64)
    for u, v in itertools.product(range(d), repeat=2):
        rhs = np.array([wv(Nb[v], g.bracket(Nb[u], Ab[t])) for t in range(d)], dtype=np.int64)
        nab[u, :, v] = F.matmul(rhs, Pinv)
    fh = FlatLieSuperalgebra(h, Connection(h, nab), require_torsion_free=allow_torsion is False)
    kind = "even" if w.parity == 0 else "odd"
    r = dual_module(fh, kind)

    def i_w(a):
        return np.array([wv(a, Nb[b]) for b in range(d)], dtype=np.int64)

    c = Cochain2.zero(h, r)
    for i, j in itertools.combinations(range(d), 2):
        c.alpha[i, j] = c.alpha[j, i] = i_w(F.matmul(split(g.bracket(Nb[i], Nb[j]))[1], Ab))
    for i in range(m, d):
        c.gamma[i] = i_w(F.matmul(split(g._square(Nb[i]))[1], Ab))
    t = ExtensionTuple(fh, c, kind)
    if allow_torsion and not is_torsion_free(h, fh.nabla):
        return Extracted(t, Nb, Ab, None, None, VerificationReport(subject="extraction isomorphism"))
    ext = build_extension(t)
    # Phi(v) = (h-coordinates of p_N v, i_w(p_a v)) in old coordinates, then permuted
    phi_old = np.zeros((2 * d, g.dim), dtype=np.int64)
    for col in range(g.dim):
        hn, ha = split(g.e(col))
        phi_old[:d, col] = hn
        phi_old[d:, col] = i_w(F.matmul(ha, Ab))
    phi = F.matmul(ext.old_to_new(), phi_old)
    rep = morphism_failures(g, ext.g, phi)
    pulled = F.matmul(F.matmul(phi.T, ext.form.gram), phi)
    if not np.array_equal(pulled, G):
        rep.fail("form", (), "Phi does not carry the form to the canonical pairing")
    rep.subject = "extraction isomorphism"
    return Extracted(t, Nb, Ab, phi, ext, rep)


def _lift_names(g: LieSuperalgebra, B) -> list[str]:
    out = []
    for row in B:
        nz = np.flatnonzero(row)
        out.append("+".join(g.names[k] if row[k] == 1 else f"{row[k]:x}*{g.names[k]}" for k in nz))
    return out


@dataclass
class Equivalence:
    equivalent: bool
    sigma: np.ndarray | None  # d x N matrix: column i is sigma(e_i)
    isomorphism: np.ndarray | None
    report: VerificationReport | None


def extensions_equivalent(t1: ExtensionTuple, t2: ExtensionTuple) -> Equivalence:
    if t1.kind != t2.kind or not t1.base.same_as(t2.base):
        raise BaseMismatch("extension tuples over different bases or kinds")
    h = t1.base.h
    F = h.field
    r = t1.cocycle.r
    l1, l2 = Layout1(h, r), Layout2(h, r)
    diff = t1.cocycle + t2.cocycle
    par = diff.parity()
    S = symmetric_cochains(h, r, par if par is not None else None)
    if S.shape[0] == 0:
        ok = diff.is_zero()
        return Equivalence(ok, np.zeros((r.dim, h.dim), dtype=np.int64) if ok else None, None, None)
    D = F.matmul(d1_matrix(h, r), S.T)
    x = solve(F, D, l2.encode(diff))
    if x is None:
        return Equivalence(False, None, None, None)
    sigma = l1.matrix(F.matmul(x, S))
    if t1.cocycle.parity() != 0 or t2.cocycle.parity() != 0:
        return Equivalence(True, sigma, None, None)  # no extension for odd cocycles
    e1, e2 = build_extension(t1), build_extension(t2)
    N = h.dim
    psi_old = np.eye(2 * N, dtype=np.int64)
    psi_old[N:, :N] = sigma
    psi = F.matmul(F.matmul(e2.old_to_new(), psi_old), e1.old_to_new().T)
    rep = morphism_failures(e1.g, e2.g, psi)
    pulled = F.matmul(F.matmul(psi.T, e2.form.gram), psi)
    if not np.array_equal(pulled, e1.form.gram):
        rep.fail("form", ())
    return Equivalence(True, sigma, psi, rep)
