"""Exact linear algebra over GF(2^k).

Matrices are 2-d numpy int64 arrays of bit-packed field elements; the
field is passed alongside.  Subspaces keep a canonical RREF basis so that
equality is plain array comparison.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .errors import AmbientMismatch, NotASubspace
from .field import GF2k


def as_matrix(M, cols: int | None = None) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, cols or 0), dtype=np.int64)
    if A.size == 0 and cols is not None:
        A = A.reshape(A.shape[0], cols)
    return A


def rref(F: GF2k, M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form; returns (R, rank, pivot columns)."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        piv = int(R[r, c])
        if piv != 1:
            R[r] = F.mul(R[r], F.inv(piv))
        col = R[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            R[others] ^= F.mul(col[others, None], R[r][None, :])
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(F: GF2k, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return rref(F, M)[1]


def nullspace_basis(F: GF2k, M, cols: int | None = None) -> np.ndarray:
    M = as_matrix(M, cols)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, r, piv = rref(F, M)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, p in enumerate(piv):
            out[t, p] = R[i, f]  # char 2: -x = x
    return out


def nullspace(F: GF2k, M, cols: int | None = None) -> "Subspace":
    M = as_matrix(M, cols)
    return Subspace(F, M.shape[1], nullspace_basis(F, M))


def solve(F: GF2k, A, b) -> np.ndarray | None:
    """One solution x of A x = b, or None."""
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.int64)
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, r, piv = rref(F, aug)
    n = A.shape[1]
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, p in enumerate(piv):
        x[p] = R[i, n]
    return x


def solve_affine(F: GF2k, A, b) -> tuple[np.ndarray, np.ndarray] | None:
    """Particular solution plus nullspace basis, or None if inconsistent."""
    x = solve(F, A, b)
    if x is None:
        return None
    return x, nullspace_basis(F, A, as_matrix(A).shape[1])


def inverse(F: GF2k, A) -> np.ndarray | None:
    A = as_matrix(A)
    n = A.shape[0]
    if A.shape != (n, n):
        return None
    R, r, piv = rref(F, np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1))
    if r < n or piv[n - 1] != n - 1:
        return None
    return R[:, n:]


def span_combinations(F: GF2k, basis: np.ndarray) -> Iterator[np.ndarray]:
    """All vectors of span(basis), zero first, in lexicographic coefficient order."""
    basis = np.asarray(basis, dtype=np.int64)
    d, n = basis.shape
    for coeffs in itertools.product(F.elements(), repeat=d):
        if d == 0:
            yield np.zeros(n, dtype=np.int64)
        else:
            yield F.xor_sum(F.mul(np.array(coeffs)[:, None], basis), axis=0)


class Subspace:
    """A subspace of F^n with canonical RREF basis rows."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, F: GF2k, ambient_dim: int, vectors=None):
        self.field = F
        self.ambient_dim = ambient_dim
        if vectors is None:
            vectors = np.zeros((0, ambient_dim), dtype=np.int64)
        V = as_matrix(vectors, ambient_dim)
        if V.shape[1] != ambient_dim:
            raise AmbientMismatch(f"vectors of length {V.shape[1]} in ambient {ambient_dim}")
        if V.shape[0] == 0:
            self.basis = np.zeros((0, ambient_dim), dtype=np.int64)
            self.pivots = []
        else:
            R, r, piv = rref(F, V)
            self.basis = R[:r]
            self.pivots = piv
        self.basis.setflags(write=False)

    @classmethod
    def full(cls, F: GF2k, n: int) -> "Subspace":
        return cls(F, n, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, F: GF2k, n: int) -> "Subspace":
        return cls(F, n)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"{self.ambient_dim} vs {other.ambient_dim}")
        self.field.check_same(other.field)

    def reduce(self, v) -> np.ndarray:
        """Normal form of v modulo this subspace (zero iff v is inside)."""
        v = np.array(v, dtype=np.int64, copy=True)
        for row, p in zip(self.basis, self.pivots):
            c = int(v[p])
            if c:
                v ^= self.field.mul(c, row)
        return v

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._check(v)
            return all(not self.reduce(r).any() for r in v.basis)
        return not self.reduce(v).any()

    __contains__ = contains

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of v in the RREF basis (v must lie in the subspace)."""
        v = np.asarray(v, dtype=np.int64)
        c = v[self.pivots] if self.pivots else np.zeros(0, dtype=np.int64)
        if self.dim and not np.array_equal(self.field.matmul(c, self.basis), v):
            raise NotASubspace("vector not in subspace")
        if not self.dim and v.any():
            raise NotASubspace("vector not in subspace")
        return np.array(c, dtype=np.int64)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, np.concatenate([self.basis, other.basis]))

    __add__ = sum

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # a*U = b*W  <=>  (a, b) in null([U; W]^T)
        M = np.concatenate([self.basis, other.basis]).T
        N = nullspace_basis(self.field, M)
        vecs = self.field.matmul(N[:, : self.dim], self.basis) if N.shape[0] else None
        return Subspace(self.field, self.ambient_dim, vecs)

    def quotient_dim(self, other: "Subspace") -> int:
        self._check(other)
        if not self.contains(other):
            raise NotASubspace("quotient_dim requires the second space inside the first")
        return self.dim - other.dim

    def complement_representatives(self, sub: "Subspace") -> np.ndarray:
        """RREF-canonical representatives of self/sub."""
        if not self.contains(sub):
            raise NotASubspace("not a subspace")
        red = [sub.reduce(r) for r in self.basis]
        red = [r for r in red if r.any()]
        if not red:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        R, r, _ = rref(self.field, np.array(red))
        return R[:r]

    def key(self) -> bytes:
        return self.basis.tobytes() + bytes([self.ambient_dim])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def vectors(self) -> Iterator[np.ndarray]:
        return span_combinations(self.field, self.basis)


def enumerate_subspaces(F: GF2k, n: int, k: int) -> Iterator[np.ndarray]:
    """Every k-dim subspace of F^n once, as its RREF basis (Gaussian cells)."""
    if k == 0:
        yield np.zeros((0, n), dtype=np.int64)
        return
    for piv in itertools.combinations(range(n), k):
        free_slots = [(i, c) for i, p in enumerate(piv) for c in range(p + 1, n) if c not in piv]
        for vals in itertools.product(F.elements(), repeat=len(free_slots)):
            B = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(piv):
                B[i, p] = 1
            for (i, c), v in zip(free_slots, vals):
                B[i, c] = v
            yield B


def count_subspaces(q: int, n: int, k: int) -> int:
    """Gaussian binomial coefficient [n choose k]_q."""
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_gl(F: GF2k, n: int) -> Iterator[np.ndarray]:
    """All invertible n x n matrices, built column by column."""
    cols: list[np.ndarray] = []

    def rec(span: Subspace):
        if len(cols) == n:
            yield np.array(cols, dtype=np.int64).T.reshape(n, n)
            return
        for vals in itertools.product(F.elements(), repeat=n):
            v = np.array(vals, dtype=np.int64)
            if span.contains(v):
                continue
            cols.append(v)
            yield from rec(span.sum(Subspace(F, n, v)))
            cols.pop()

    yield from rec(Subspace.zero(F, n))


def gl_order(q: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def lincomb(F: GF2k, coeffs, arrays) -> np.ndarray:
    """sum_i coeffs[i] * arrays[i] for a stack of equally shaped arrays."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    arrays = np.asarray(arrays, dtype=np.int64)
    if coeffs.size == 0:
        return np.zeros(arrays.shape[1:], dtype=np.int64)
    if F.k == 1:
        flat = arrays.reshape(arrays.shape[0], -1)
        return ((coeffs @ flat) & 1).reshape(arrays.shape[1:])
    shaped = coeffs.reshape((-1,) + (1,) * (arrays.ndim - 1))
    return np.bitwise_xor.reduce(F.mul(shaped, arrays), axis=0)


def unit(n: int, i: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def einsum2(F: GF2k, spec: str, A, B) -> np.ndarray:
    """Two-operand einsum over GF(2^k), e.g. ``einsum2(F, 'ab,bc->ac', A, B)``."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.k == 1:
        return np.einsum(spec, A, B) & 1
    ins, out = spec.split("->")
    sa, sb = ins.split(",")
    letters = list(dict.fromkeys(sa + sb))
    sizes = {}
    for s, X in ((sa, A), (sb, B)):
        for ch, n in zip(s, X.shape):
            sizes[ch] = n

    def spread(s, X):
        X = np.einsum(f"{s}->{''.join(ch for ch in letters if ch in s)}", X)
        shape = [sizes[ch] if ch in s else 1 for ch in letters]
        return X.reshape(shape)

    prod = F.mul(spread(sa, A), spread(sb, B))
    summed = tuple(i for i, ch in enumerate(letters) if ch not in out)
    if summed:
        prod = np.bitwise_xor.reduce(prod, axis=summed) if all(sizes[letters[i]] for i in summed) else np.zeros(
            [sizes[ch] for ch in letters if ch in out], dtype=np.int64
        )
    kept = [ch for ch in letters if ch in out]
    return np.einsum(f"{''.join(kept)}->{out}", prod)
