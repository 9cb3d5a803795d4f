"""Isomorphism and automorphism search between small Lie superalgebras.

The search is exhaustive but not naive.  Choose basis vectors e_i (i in S)
spanning a complement of the derived algebra.  Once the images v_i of
those vectors are fixed, every remaining condition

    Phi([e_i, e_j]) = [v_i, Phi(e_j)],   Phi(s(e_i)) = s(v_i),
    omega1(e_i, e_j) = omega2(v_i, Phi(e_j))

is linear in the entries of Phi.  So we backtrack over images of S
(pruned by conjugation invariants of ad) and solve a linear system at
each node.  The solution set is complete: every isomorphism appears.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .errors import DimensionTooLarge, FieldMismatch
from .linalg import Subspace, rank, rref, span_combinations
from .superalg import LieSuperalgebra, center, complement_indices, derived_subalgebra, superdim_of


def check_search_size(F, N: int) -> None:
    limit = {1: 8, 2: 4}.get(F.k, 2)
    if N > limit:
        raise DimensionTooLarge(f"isomorphism search limited to total dim {limit} over GF(2^{F.k})")


def vector_signature(g: LieSuperalgebra, v: np.ndarray) -> tuple:
    F = g.field
    adv = g.ad_of(v)
    sig = []
    P = adv
    for _ in range(g.dim):
        sig.append(rank(F, P))
        P = F.matmul(P, adv)
    if g.is_odd_vector(v) and v.any():
        sv = g._square(v)
        sig.append(rank(F, g.ad_of(sv)))
        sig.append(int(sv.any()))
    return tuple(sig)


def invariants(g: LieSuperalgebra, cohomology: bool = True) -> tuple:
    inv = [tuple(g.sdim), tuple(superdim_of(g, derived_subalgebra(g))), tuple(superdim_of(g, center(g)))]
    if cohomology and g.dim <= 6:
        from .cohomology import cohomology_dim
        from .superalg import trivial_module

        K = trivial_module(g)
        inv.append(cohomology_dim(g, K, 1))
        inv.append(cohomology_dim(g, K, 2))
    return tuple(inv)


class _System:
    """Linear constraints on block-diagonal Phi."""

    def __init__(self, g1: LieSuperalgebra, g2: LieSuperalgebra, w1, w2):
        self.g1, self.g2 = g1, g2
        self.F = g1.field
        N = g1.dim
        self.N = N
        par = g1.parity
        uidx = -np.ones((N, N), dtype=np.int64)
        u = 0
        for r in range(N):
            for c in range(N):
                if par[r] == par[c]:
                    uidx[r, c] = u
                    u += 1
        self.uidx = uidx
        self.U = u
        self.w1 = None if w1 is None else np.asarray(w1, dtype=np.int64)
        self.w2 = None if w2 is None else np.asarray(w2, dtype=np.int64)

    def rows_for(self, i: int, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        g1, g2, F, N, uidx = self.g1, self.g2, self.F, self.N, self.uidx
        blocks_A, blocks_b = [], []
        # Phi e_i = v
        A = np.zeros((N, self.U), dtype=np.int64)
        for r in range(N):
            if uidx[r, i] >= 0:
                A[r, uidx[r, i]] = 1
        blocks_A.append(A)
        blocks_b.append(np.where(uidx[:, i] >= 0, v, 0))
        # Phi c1[i, j] + ad2(v) Phi e_j = 0
        adv = g2.ad_of(v)
        A = np.zeros((N * N, self.U), dtype=np.int64)
        for j in range(N):
            cij = g1.c[i, j]
            for r in range(N):
                row = j * N + r
                for col in np.flatnonzero(cij):
                    if uidx[r, col] >= 0:
                        A[row, uidx[r, col]] ^= cij[col]
                for t in np.flatnonzero(adv[r]):
                    if uidx[t, j] >= 0:
                        A[row, uidx[t, j]] ^= adv[r, t]
        blocks_A.append(A)
        blocks_b.append(np.zeros(N * N, dtype=np.int64))
        if i >= g1.m:
            A = np.zeros((N, self.U), dtype=np.int64)
            s1 = g1.sq[i]
            for r in range(N):
                for col in np.flatnonzero(s1):
                    if uidx[r, col] >= 0:
                        A[r, uidx[r, col]] ^= s1[col]
            blocks_A.append(A)
            blocks_b.append(g2._square(v))
        if self.w1 is not None:
            # omega2(v, Phi e_j) = omega1(e_i, e_j)
            wv = F.matmul(v, self.w2)
            A = np.zeros((N, self.U), dtype=np.int64)
            for j in range(N):
                for t in np.flatnonzero(wv):
                    if uidx[t, j] >= 0:
                        A[j, uidx[t, j]] ^= wv[t]
            blocks_A.append(A)
            blocks_b.append(self.w1[i].copy())
        return np.concatenate(blocks_A), np.concatenate(blocks_b)

    def solve(self, A: np.ndarray, b: np.ndarray):
        F = self.F
        R, r, piv = rref(F, np.concatenate([A, b[:, None]], axis=1))
        if piv and piv[-1] == self.U:
            return None
        x0 = np.zeros(self.U, dtype=np.int64)
        for k, p in enumerate(piv):
            x0[p] = R[k, self.U]
        free = [c for c in range(self.U) if c not in set(piv)]
        null = np.zeros((len(free), self.U), dtype=np.int64)
        for t, f in enumerate(free):
            null[t, f] = 1
            for k, p in enumerate(piv):
                null[t, p] = R[k, f]
        # compress to reduced rows to keep later stacking small
        return x0, null, R[:r]

    def to_matrix(self, x: np.ndarray) -> np.ndarray:
        Phi = np.zeros((self.N, self.N), dtype=np.int64)
        mask = self.uidx >= 0
        Phi[mask] = x[self.uidx[mask]]
        return Phi


def _full_check(g1, g2, Phi, w1, w2) -> bool:
    from .superalg import morphism_failures

    F = g1.field
    if rank(F, Phi) < g1.dim:
        return False
    if not morphism_failures(g1, g2, Phi).ok:
        return False
    if w1 is not None:
        pulled = F.matmul(F.matmul(Phi.T, w2), Phi)
        if not np.array_equal(pulled, w1):
            return False
    return True


def iter_isomorphisms(
    g1: LieSuperalgebra,
    g2: LieSuperalgebra,
    form1=None,
    form2=None,
    prune_invariants: bool = True,
) -> Iterator[np.ndarray]:
    if g1.field != g2.field:
        raise FieldMismatch("algebras over different fields")
    if g1.sdim != g2.sdim:
        return
    F = g1.field
    N = g1.dim
    check_search_size(F, N)
    w1 = None if form1 is None else np.asarray(getattr(form1, "gram", form1), dtype=np.int64)
    w2 = None if form2 is None else np.asarray(getattr(form2, "gram", form2), dtype=np.int64)
    if (w1 is None) != (w2 is None):
        raise ValueError("supply both forms or neither")
    if prune_invariants and invariants(g1) != invariants(g2):
        return
    if N == 0:
        yield np.zeros((0, 0), dtype=np.int64)
        return
    D1 = derived_subalgebra(g1)
    D2 = derived_subalgebra(g2)
    S = complement_indices(D1) or list(range(N))
    system = _System(g1, g2, w1, w2)

    # candidate images per index in S
    cands: dict[int, list[np.ndarray]] = {}
    sig_cache: dict[bytes, tuple] = {}
    for i in S:
        target = vector_signature(g1, g1.e(i))
        block = range(g2.m) if i < g1.m else range(g2.m, N)
        out = []
        for vals in itertools.product(F.elements(), repeat=len(block)):
            if not any(vals):
                continue
            v = np.zeros(N, dtype=np.int64)
            v[list(block)] = vals
            if not D1.contains(g1.e(i)) and D2.contains(v):
                continue
            key = v.tobytes()
            if key not in sig_cache:
                sig_cache[key] = vector_signature(g2, v)
            if sig_cache[key] == target:
                out.append(v)
        cands[i] = out

    def rec(depth: int, A: np.ndarray, b: np.ndarray, chosen: list[np.ndarray]):
        if depth == len(S):
            sol = system.solve(A, b)
            if sol is None:
                return
            x0, null, _ = sol
            for comb in span_combinations(F, null) if null.shape[0] else [np.zeros(system.U, dtype=np.int64)]:
                Phi = system.to_matrix(x0 ^ comb)
                if _full_check(g1, g2, Phi, w1, w2):
                    yield Phi
            return
        i = S[depth]
        for v in cands[i]:
            # images of S must stay independent modulo the derived algebra of g2
            if not D1.contains(g1.e(i)):
                quotient_span = D2
                for w in chosen:
                    quotient_span = quotient_span.sum(Subspace(F, N, w))
                if quotient_span.contains(v):
                    continue
            Ai, bi = system.rows_for(i, v)
            A2 = np.concatenate([A, Ai])
            b2 = np.concatenate([b, bi])
            sol = system.solve(A2, b2)
            if sol is None:
                continue
            # keep the reduced system to bound growth
            _, _, R = sol
            A3, b3 = R[:, :-1], R[:, -1]
            yield from rec(depth + 1, A3, b3, chosen + [v])

    yield from rec(0, np.zeros((0, system.U), dtype=np.int64), np.zeros(0, dtype=np.int64), [])


def find_isomorphism(g1, g2, form1=None, form2=None) -> np.ndarray | None:
    """First witness in search order, or None."""
    for Phi in iter_isomorphisms(g1, g2, form1, form2):
        return Phi
    return None


def automorphisms(g: LieSuperalgebra, form=None) -> list[np.ndarray]:
    return list(iter_isomorphisms(g, g, form, form, prune_invariants=False))
