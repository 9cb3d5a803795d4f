"""Degree 1 and 2 cohomology with squaring components.

Cochain coordinates are flattened as follows.

* degree 1: phi(e_0), phi(e_1), ... each a vector in M;
* degree 2: alpha(e_i, e_j) for i < j in lexicographic order, then
  gamma(e_i) for odd i, each a vector in M.

The differentials are linear in these coordinates, so cocycle spaces are
obtained by probing the differential on unit cochains and taking a
nullspace.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dfield

import numpy as np

from .linalg import Subspace, lincomb, nullspace, unit
from .superalg import LieSuperalgebra, Representation, odd_test_vectors


# -- layouts ------------------------------------------------------------------
class Layout1:
    """Coordinates of 1-cochains g -> M."""

    def __init__(self, g: LieSuperalgebra, r: Representation):
        self.g, self.r = g, r
        self.N, self.d = g.dim, r.dim
        self.size = self.N * self.d
        self.parity = np.array(
            [(g.parity[i] + r.parity[k]) % 2 for i in range(self.N) for k in range(self.d)], dtype=np.int64
        )

    def matrix(self, vec) -> np.ndarray:
        """d x N matrix whose column i is phi(e_i)."""
        return np.asarray(vec, dtype=np.int64).reshape(self.N, self.d).T.copy()

    def vector(self, phi) -> np.ndarray:
        return np.asarray(phi, dtype=np.int64).T.reshape(-1).copy()


class Layout2:
    """Coordinates of 2-cochains (alpha, gamma)."""

    def __init__(self, g: LieSuperalgebra, r: Representation):
        self.g, self.r = g, r
        self.N, self.d = g.dim, r.dim
        self.pairs = list(itertools.combinations(range(self.N), 2))
        self.odd = list(g.odd_indices())
        self.size = (len(self.pairs) + len(self.odd)) * self.d
        par = []
        for i, j in self.pairs:
            par += [(g.parity[i] + g.parity[j] + r.parity[k]) % 2 for k in range(self.d)]
        for i in self.odd:
            par += [int(r.parity[k]) for k in range(self.d)]
        self.parity = np.array(par, dtype=np.int64)

    def decode(self, vec) -> "Cochain2":
        vec = np.asarray(vec, dtype=np.int64)
        N, d = self.N, self.d
        alpha = np.zeros((N, N, d), dtype=np.int64)
        gamma = np.zeros((N, d), dtype=np.int64)
        for t, (i, j) in enumerate(self.pairs):
            alpha[i, j] = alpha[j, i] = vec[t * d : (t + 1) * d]
        off = len(self.pairs) * d
        for t, i in enumerate(self.odd):
            gamma[i] = vec[off + t * d : off + (t + 1) * d]
        return Cochain2(self.g, self.r, alpha, gamma)

    def encode(self, c: "Cochain2") -> np.ndarray:
        parts = [c.alpha[i, j] for i, j in self.pairs] + [c.gamma[i] for i in self.odd]
        if not parts:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate(parts).astype(np.int64)

    def coordinate_label(self, t: int) -> str:
        d = self.d
        k = t % d
        slot = t // d
        names, mnames = self.g.names, self.r.names
        if slot < len(self.pairs):
            i, j = self.pairs[slot]
            return f"alpha({names[i]},{names[j]})[{mnames[k]}]"
        i = self.odd[slot - len(self.pairs)]
        return f"gamma({names[i]})[{mnames[k]}]"


# -- cochains ---------------------------------------------------------------
@dataclass
class Cochain2:
    g: LieSuperalgebra
    r: Representation
    alpha: np.ndarray  # (N, N, d), symmetric, zero diagonal
    gamma: np.ndarray  # (N, d), rows used for odd indices

    @classmethod
    def zero(cls, g, r) -> "Cochain2":
        return cls(g, r, np.zeros((g.dim, g.dim, r.dim), dtype=np.int64), np.zeros((g.dim, r.dim), dtype=np.int64))

    def alpha_eval(self, x, y) -> np.ndarray:
        F = self.g.field
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        w = F.mul(x[:, None], y[None, :])
        return lincomb(F, w.reshape(-1), self.alpha.reshape(-1, self.r.dim))

    def gamma_eval(self, x) -> np.ndarray:
        """gamma on an odd vector via the polarization with alpha."""
        F = self.g.field
        x = np.asarray(x, dtype=np.int64)
        out = lincomb(F, F.mul(x, x), self.gamma)
        for i, j in itertools.combinations(np.flatnonzero(x), 2):
            out = out ^ F.mul(F.mul(int(x[i]), int(x[j])), self.alpha[i, j])
        return out

    def vector(self) -> np.ndarray:
        return Layout2(self.g, self.r).encode(self)

    def __add__(self, other: "Cochain2") -> "Cochain2":
        return Cochain2(self.g, self.r, self.alpha ^ other.alpha, self.gamma ^ other.gamma)

    __sub__ = __add__

    def parity(self) -> int | None:
        """0 or 1 for homogeneous cochains, None for mixed (zero counts as even)."""
        lay = Layout2(self.g, self.r)
        v = self.vector()
        pars = set(lay.parity[np.flatnonzero(v)].tolist())
        if not pars:
            return 0
        return pars.pop() if len(pars) == 1 else None

    def is_zero(self) -> bool:
        return not self.alpha.any() and not self.gamma[self.g.m :].any()


# -- differentials -----------------------------------------------------------
def d0(g: LieSuperalgebra, r: Representation, m) -> np.ndarray:
    """Coboundary of a module element: phi(x) = x.m (returned as d x N)."""
    return np.stack([r.act(g.e(i), m) for i in range(g.dim)], axis=1) if g.dim else np.zeros((r.dim, 0), dtype=np.int64)


def d1(g: LieSuperalgebra, r: Representation, phi) -> Cochain2:
    """(d_ce phi, delta phi) for phi given as a d x N matrix."""
    F = g.field
    phi = np.asarray(phi, dtype=np.int64)
    N = g.dim
    out = Cochain2.zero(g, r)
    for i, j in itertools.combinations(range(N), 2):
        v = F.matmul(r.rho[i], phi[:, j]) ^ F.matmul(r.rho[j], phi[:, i]) ^ F.matmul(phi, g.c[i, j])
        out.alpha[i, j] = out.alpha[j, i] = v
    for i in g.odd_indices():
        out.gamma[i] = F.matmul(r.rho[i], phi[:, i]) ^ F.matmul(phi, g.sq[i])
    return out


def delta1_at(g, r, phi, x) -> np.ndarray:
    """delta phi(x) = x.phi(x) + phi(s(x)) at any odd x."""
    F = g.field
    phi = np.asarray(phi, dtype=np.int64)
    return r.act(x, F.matmul(phi, x)) ^ F.matmul(phi, g._square(x))


@dataclass
class D2Table:
    triples: list
    tests: list
    ce: np.ndarray  # (len(triples), d)
    delta: np.ndarray  # (len(tests), N, d)

    @property
    def is_zero(self) -> bool:
        return not self.ce.any() and not self.delta.any()

    def flat(self) -> np.ndarray:
        return np.concatenate([self.ce.reshape(-1), self.delta.reshape(-1)])

    def witnesses(self, g: LieSuperalgebra, limit: int = 5) -> list[str]:
        out = []
        for t, (i, j, k) in enumerate(self.triples):
            if self.ce[t].any():
                out.append(f"d_ce({g.names[i]},{g.names[j]},{g.names[k]})")
        for t, label in enumerate(self.tests):
            for z in np.flatnonzero(np.any(self.delta[t], axis=1)):
                out.append(f"delta2({label},{g.names[z]})")
        return out[:limit]


def d2(g: LieSuperalgebra, r: Representation, c: Cochain2) -> D2Table:
    F = g.field
    N = g.dim
    triples = list(itertools.combinations(range(N), 3))
    ce = np.zeros((len(triples), r.dim), dtype=np.int64)
    A = c.alpha
    for t, (i, j, k) in enumerate(triples):
        v = F.matmul(r.rho[i], A[j, k]) ^ F.matmul(r.rho[j], A[k, i]) ^ F.matmul(r.rho[k], A[i, j])
        v = v ^ c.alpha_eval(g.c[i, j], g.e(k)) ^ c.alpha_eval(g.c[j, k], g.e(i)) ^ c.alpha_eval(g.c[k, i], g.e(j))
        ce[t] = v
    tests = list(odd_test_vectors(N, list(g.odd_indices())))
    delta = np.zeros((len(tests), N, r.dim), dtype=np.int64)
    for t, (label, x) in enumerate(tests):
        rx = r.matrix(x)
        gx = c.gamma_eval(x)
        sx = g._square(x)
        for z in range(N):
            ez = g.e(z)
            v = F.matmul(rx, c.alpha_eval(x, ez)) ^ F.matmul(r.rho[z], gx)
            v = v ^ c.alpha_eval(sx, ez) ^ c.alpha_eval(g.bracket(x, ez), x)
            delta[t, z] = v
    return D2Table(triples, [lab for lab, _ in tests], ce, delta)


# -- cocycle spaces and cohomology -------------------------------------------
@dataclass
class CocycleSpace:
    kind: str
    layout: object
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def cochains(self) -> list:
        if isinstance(self.layout, Layout2):
            return [self.layout.decode(v) for v in self.space.basis]
        return [self.layout.matrix(v) for v in self.space.basis]


@dataclass
class Cohomology:
    degree: int
    layout: object
    cocycles: Subspace
    coboundaries: Subspace
    representatives: np.ndarray = dfield(default=None)

    @property
    def dim(self) -> int:
        return self.cocycles.dim - self.coboundaries.dim

    def classes(self) -> list:
        if isinstance(self.layout, Layout2):
            return [self.layout.decode(v) for v in self.representatives]
        return [self.layout.matrix(v) for v in self.representatives]


def _parity_rows(layout, parity: int | None) -> np.ndarray:
    if parity is None:
        return np.zeros((0, layout.size), dtype=np.int64)
    idx = np.flatnonzero(layout.parity != parity)
    rows = np.zeros((len(idx), layout.size), dtype=np.int64)
    rows[np.arange(len(idx)), idx] = 1
    return rows


def d2_matrix(g: LieSuperalgebra, r: Representation) -> np.ndarray:
    lay = Layout2(g, r)
    cols = [d2(g, r, lay.decode(unit(lay.size, t))).flat() for t in range(lay.size)]
    if not cols:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def d1_matrix(g: LieSuperalgebra, r: Representation) -> np.ndarray:
    """Matrix of phi -> d1(phi) from Layout1 to Layout2 coordinates."""
    l1, l2 = Layout1(g, r), Layout2(g, r)
    cols = [l2.encode(d1(g, r, l1.matrix(unit(l1.size, t)))) for t in range(l1.size)]
    if not cols:
        return np.zeros((l2.size, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def delta1_rows(g, r) -> np.ndarray:
    """d1 on 1-cochains including the pairwise-sum squaring tests."""
    l1 = Layout1(g, r)
    tests = list(odd_test_vectors(g.dim, list(g.odd_indices())))
    cols = []
    for t in range(l1.size):
        phi = l1.matrix(unit(l1.size, t))
        parts = [Layout2(g, r).encode(d1(g, r, phi))]
        parts += [delta1_at(g, r, phi, x) for _, x in tests]
        cols.append(np.concatenate(parts))
    return np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=np.int64)


def cocycle_space(g: LieSuperalgebra, r: Representation, degree: int, parity: int | None = None) -> CocycleSpace:
    F = g.field
    if degree == 1:
        lay = Layout1(g, r)
        M = np.concatenate([delta1_rows(g, r), _parity_rows(lay, parity)]) if lay.size else np.zeros((0, 0))
        return CocycleSpace("XZ1", lay, nullspace(F, M, lay.size))
    if degree == 2:
        lay = Layout2(g, r)
        M = np.concatenate([d2_matrix(g, r), _parity_rows(lay, parity)]) if lay.size else np.zeros((0, 0))
        return CocycleSpace("XZ2", lay, nullspace(F, M, lay.size))
    raise ValueError("only degrees 1 and 2 are supported")


def coboundary_space(g: LieSuperalgebra, r: Representation, degree: int, parity: int | None = None) -> Subspace:
    F = g.field
    if degree == 1:
        lay = Layout1(g, r)
        vecs = [
            lay.vector(d0(g, r, unit(r.dim, k)))
            for k in range(r.dim)
            if parity is None or (r.parity[k] == parity)
        ]
        return Subspace(F, lay.size, np.array(vecs) if vecs else None)
    l1, l2 = Layout1(g, r), Layout2(g, r)
    D = d1_matrix(g, r)
    keep = [t for t in range(l1.size) if parity is None or l1.parity[t] == parity]
    return Subspace(F, l2.size, D[:, keep].T if keep else None)


def cohomology(g: LieSuperalgebra, r: Representation, degree: int, parity: int | None = None) -> Cohomology:
    Z = cocycle_space(g, r, degree, parity)
    B = coboundary_space(g, r, degree, parity)
    if not Z.space.contains(B):
        raise AssertionError("coboundaries are not cocycles")
    reps = Z.space.complement_representatives(B)
    return Cohomology(degree, Z.layout, Z.space, B, reps)


def cohomology_dim(g: LieSuperalgebra, r: Representation, degree: int, parity: int | None = None) -> int:
    return cohomology(g, r, degree, parity).dim
