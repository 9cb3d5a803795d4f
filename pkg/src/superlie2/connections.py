"""Connections on Lie superalgebras, their torsion and curvature, and post-Lie data.

``nabla[i]`` is the matrix of the operator nabla_{e_i}; its column j is
nabla_{e_i} e_j.  Torsion and curvature follow the characteristic-2
definitions with a squaring slot:

    T(x,y) = nabla_x y + nabla_y x + [x,y]      U(x) = nabla_x x + s(x)
    R(x,y) = nabla_[x,y] + [nabla_x, nabla_y]    S(x) = nabla_s(x) + nabla_x^2
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NotFlatParallel, NotPostLie
from .leftsym import Product
from .linalg import einsum2, lincomb
from .report import VerificationReport
from .superalg import LieSuperalgebra, derivation_failures, odd_test_vectors, verify_lie


class Connection:
    def __init__(self, g: LieSuperalgebra, nabla=None, name: str = ""):
        N = g.dim
        self.g = g
        self.nabla = np.zeros((N, N, N), dtype=np.int64) if nabla is None else np.array(nabla, dtype=np.int64)
        if self.nabla.shape != (N, N, N):
            raise ValueError("connection table does not fit the algebra")
        self.nabla.setflags(write=False)
        self.name = name

    @classmethod
    def from_product(cls, g: LieSuperalgebra, p: Product) -> "Connection":
        return cls(g, p.left)

    def to_product(self) -> Product:
        return Product.like(self.g, np.transpose(self.nabla, (0, 2, 1)))

    def op(self, x) -> np.ndarray:
        """Matrix of nabla_x."""
        return lincomb(self.g.field, np.asarray(x, dtype=np.int64), self.nabla)

    def apply(self, x, y) -> np.ndarray:
        return self.g.field.matmul(self.op(x), np.asarray(y, dtype=np.int64))

    def is_even(self) -> bool:
        P = self.g.parity
        bad = (self.nabla != 0) & (P[None, :, None] != (P[:, None, None] + P[None, None, :]) % 2)
        return not bad.any()

    def __eq__(self, other) -> bool:
        return isinstance(other, Connection) and np.array_equal(self.nabla, other.nabla)

    def __repr__(self) -> str:
        return f"Connection({self.name or 'on ' + repr(self.g)})"


def random_connection(g: LieSuperalgebra, seed: int) -> Connection:
    """Even connection with entries drawn from random.Random(seed)."""
    rng = random.Random(seed)
    F, N, P = g.field, g.dim, g.parity
    nabla = np.zeros((N, N, N), dtype=np.int64)
    for i, k, j in itertools.product(range(N), repeat=3):
        if P[k] == (P[i] + P[j]) % 2:
            nabla[i, k, j] = rng.randrange(F.q)
    return Connection(g, nabla, f"random[{seed}]")


# -- torsion and curvature as evaluators ------------------------------------------
class Geometry:
    """Evaluates T, U, R, S, their duals and covariant derivatives at any vectors."""

    def __init__(self, g: LieSuperalgebra, n: Connection):
        self.g, self.n, self.F = g, n, g.field

    # primitive pieces
    def nab(self, x, y):
        return self.n.apply(x, y)

    def T(self, x, y):
        return self.nab(x, y) ^ self.nab(y, x) ^ self.g.bracket(x, y)

    def U(self, x):
        return self.nab(x, x) ^ self.g._square(x)

    def R(self, x, y):
        F = self.F
        Nx, Ny = self.n.op(x), self.n.op(y)
        return self.n.op(self.g.bracket(x, y)) ^ F.matmul(Nx, Ny) ^ F.matmul(Ny, Nx)

    def S(self, x):
        Nx = self.n.op(x)
        return self.n.op(self.g._square(x)) ^ self.F.matmul(Nx, Nx)

    def act(self, M, v):
        return self.F.matmul(M, v)

    # covariant derivatives along z
    def dT(self, z, x, y):
        return self.nab(z, self.T(x, y)) ^ self.T(self.nab(z, x), y) ^ self.T(x, self.nab(z, y))

    def dU(self, z, x):
        return self.nab(z, self.U(x)) ^ self.T(self.nab(z, x), x)

    def dR(self, z, x, y):
        F = self.F
        Nz = self.n.op(z)
        Rxy = self.R(x, y)
        return F.matmul(Nz, Rxy) ^ self.R(self.nab(z, x), y) ^ self.R(x, self.nab(z, y)) ^ F.matmul(Rxy, Nz)

    def dS(self, z, x):
        F = self.F
        Nz = self.n.op(z)
        Sx = self.S(x)
        return F.matmul(Nz, Sx) ^ self.R(self.nab(z, x), x) ^ F.matmul(Sx, Nz)

    def asso(self, x, y, z):
        """(x*y)*z + x*(y*z) for x*y = nabla_x y."""
        return self.nab(self.nab(x, y), z) ^ self.nab(x, self.nab(y, z))


@dataclass
class TorsionData:
    T: np.ndarray  # (N, N, N): T[i, j] = T(e_i, e_j)
    U: dict  # label -> U(x) at odd basis vectors and pairwise sums


@dataclass
class CurvatureData:
    R: np.ndarray  # (N, N, N, N): R[i, j] = matrix of R(e_i, e_j)
    S: dict  # label -> matrix S(x) at odd tests


def _odd_tests(g):
    return list(odd_test_vectors(g.dim, list(g.odd_indices())))


def torsion(g: LieSuperalgebra, n: Connection) -> TorsionData:
    geo = Geometry(g, n)
    N = g.dim
    T = np.zeros((N, N, N), dtype=np.int64)
    for i, j in itertools.product(range(N), repeat=2):
        T[i, j] = geo.T(g.e(i), g.e(j))
    return TorsionData(T, {lab: geo.U(x) for lab, x in _odd_tests(g)})


def curvature(g: LieSuperalgebra, n: Connection) -> CurvatureData:
    geo = Geometry(g, n)
    N = g.dim
    R = np.zeros((N, N, N, N), dtype=np.int64)
    for i, j in itertools.product(range(N), repeat=2):
        R[i, j] = geo.R(g.e(i), g.e(j))
    return CurvatureData(R, {lab: geo.S(x) for lab, x in _odd_tests(g)})


def dual_connection(g: LieSuperalgebra, n: Connection) -> Connection:
    """nabla-bar_x y = nabla_y x + [x, y]."""
    N = g.dim
    bar = np.zeros((N, N, N), dtype=np.int64)
    for i in range(N):
        # column j: nabla_{e_j} e_i + [e_i, e_j]
        bar[i] = n.nabla[:, :, i].T ^ g.ad[i]
    out = Connection(g, bar, f"dual({n.name})" if n.name else "dual")
    back = n.nabla[:, :, :]
    if not np.array_equal(_dual_array(g, bar), back):
        raise AssertionError("dual connection is not an involution")
    return out


def _dual_array(g, nabla):
    N = g.dim
    out = np.zeros_like(nabla)
    for i in range(N):
        out[i] = nabla[:, :, i].T ^ g.ad[i]
    return out


@dataclass
class CovariantDerivatives:
    dT: np.ndarray  # (N, N, N): (nabla_z T)(e_i, e_j)
    dU: dict  # label -> (nabla_z U)(x)
    dR: np.ndarray  # (N, N, N, N)
    dS: dict  # label -> matrix


def covariant_derivatives(g: LieSuperalgebra, n: Connection, z) -> CovariantDerivatives:
    geo = Geometry(g, n)
    N = g.dim
    z = np.asarray(z, dtype=np.int64)
    dT = np.zeros((N, N, N), dtype=np.int64)
    dR = np.zeros((N, N, N, N), dtype=np.int64)
    for i, j in itertools.product(range(N), repeat=2):
        dT[i, j] = geo.dT(z, g.e(i), g.e(j))
        dR[i, j] = geo.dR(z, g.e(i), g.e(j))
    tests = _odd_tests(g)
    return CovariantDerivatives(
        dT, {lab: geo.dU(z, x) for lab, x in tests}, dR, {lab: geo.dS(z, x) for lab, x in tests}
    )


# -- predicates -------------------------------------------------------------------
def is_flat(g: LieSuperalgebra, n: Connection) -> bool:
    geo = Geometry(g, n)
    for i, j in itertools.combinations(range(g.dim), 2):
        if geo.R(g.e(i), g.e(j)).any():
            return False
    return not any(geo.S(x).any() for _, x in _odd_tests(g))


def is_torsion_free(g: LieSuperalgebra, n: Connection) -> bool:
    geo = Geometry(g, n)
    for i, j in itertools.combinations(range(g.dim), 2):
        if geo.T(g.e(i), g.e(j)).any():
            return False
    return not any(geo.U(x).any() for _, x in _odd_tests(g))


def is_parallel(g: LieSuperalgebra, n: Connection) -> bool:
    geo = Geometry(g, n)
    tests = _odd_tests(g)
    for k in range(g.dim):
        z = g.e(k)
        for i, j in itertools.combinations(range(g.dim), 2):
            if geo.dT(z, g.e(i), g.e(j)).any():
                return False
        if any(geo.dU(z, x).any() for _, x in tests):
            return False
    return True


def is_dual_flat(g: LieSuperalgebra, n: Connection) -> bool:
    return is_flat(g, dual_connection(g, n))


# -- the identity suite ------------------------------------------------------------
def _cyc(f: Callable, x, y, z):
    return f(x, y, z) ^ f(y, z, x) ^ f(z, x, y)


def identity_suite(g: LieSuperalgebra, n: Connection) -> VerificationReport:
    """Evaluate the torsion/curvature identities on all basis tuples.

    Odd slots with a repeated argument are also tested at pairwise sums.
    Every identity here is a theorem; a failure means a bug.
    """
    rep = VerificationReport(subject=f"identity suite {n.name}".strip())
    N = g.dim
    basis = [(g.names[i], g.e(i)) for i in range(N)]
    tests = _odd_tests(g)

    _cubic_identities(g, n, rep)
    if not tests:
        return rep
    # squaring-slot identities, batched over all (odd test x, basis y) pairs
    X = np.array([x for _, x in tests for _ in range(N)], dtype=np.int64)
    Y = np.tile(np.eye(N, dtype=np.int64), (len(tests), 1))
    where = [(lab, b) for lab, _ in tests for b, _ in basis]
    SQ = np.array([g._square(x) for _, x in tests for _ in range(N)], dtype=np.int64)
    geo = _Batch(g, n.nabla, SQ)
    bar = _Batch(g, dual_connection(g, n).nabla, SQ)

    def check(name, lhs, rhs):
        rep.count(name, len(where))
        bad = np.any((lhs != rhs).reshape(len(where), -1), axis=1)
        for r in np.flatnonzero(bad):
            rep.fail(name, where[r])

    x, y = X, Y
    Rxx = geo.mv(geo.R(y, x), x)
    # (nabla_y U)(x) = Sbar(x)y + R(y,x)x
    check("propA-squaring", geo.dU(y, x), geo.mv(bar.S(x), y) ^ Rxx)
    # T(x,T(x,y)) + T(U(x),y) = S(x)y + R(y,x)x + Sbar(x)y + Rbar(y,x)x
    check(
        "propB-squaring",
        geo.T(x, geo.T(x, y)) ^ geo.T(geo.U(x), y),
        geo.mv(geo.S(x), y) ^ Rxx ^ geo.mv(bar.S(x), y) ^ bar.mv(bar.R(y, x), x),
    )
    # (nabla_y U)(x) + (nabla_x T)(y,x) = R(y,x)x + S(x)y + T(y,U(x)) + T(x,T(y,x))
    check(
        "bianchi1-squaring",
        geo.dU(y, x) ^ geo.dT(x, y, x),
        Rxx ^ geo.mv(geo.S(x), y) ^ geo.T(y, geo.U(x)) ^ geo.T(x, geo.T(y, x)),
    )
    # (nabla_y S)(x) + (nabla_x R)(x,y) = R(x,T(x,y)) + R(y,U(x))
    check("bianchi2-squaring", geo.dS(y, x) ^ geo.dR(x, x, y), geo.R(x, geo.T(x, y)) ^ geo.R(y, geo.U(x)))
    # Asso(x,x,y) = S(x)y + nabla_{U(x)} y
    check("associator-squaring", geo.asso(x, x, y), geo.mv(geo.S(x), y) ^ geo.nab(geo.U(x), y))
    return rep


class _Batch:
    """Geometry on stacks of vectors (B, N) and operators (B, N, N).

    Squarings are only ever taken of the test vectors, so s(x) is passed in.
    """

    def __init__(self, g: LieSuperalgebra, nabla: np.ndarray, sqx: np.ndarray):
        self.g, self.F, self.nabla, self.sqx = g, g.field, nabla, sqx

    def _sum(self, prod, axis):
        return np.bitwise_xor.reduce(prod, axis=axis)

    def mv(self, M, v):
        return self._sum(self.F.mul(M, v[:, None, :]), 2)

    def mm(self, A, B):
        return self._sum(self.F.mul(A[:, :, :, None], B[:, None, :, :]), 2)

    def op(self, x):
        return self._sum(self.F.mul(x[:, :, None, None], self.nabla[None]), 1)

    def nab(self, x, y):
        return self.mv(self.op(x), y)

    def br(self, x, y):
        return self.mv(self._sum(self.F.mul(x[:, :, None, None], self.g.ad[None]), 1), y)

    def T(self, x, y):
        return self.nab(x, y) ^ self.nab(y, x) ^ self.br(x, y)

    def U(self, x):
        return self.nab(x, x) ^ self.sqx

    def R(self, x, y):
        Nx, Ny = self.op(x), self.op(y)
        return self.op(self.br(x, y)) ^ self.mm(Nx, Ny) ^ self.mm(Ny, Nx)

    def S(self, x):
        Nx = self.op(x)
        return self.op(self.sqx) ^ self.mm(Nx, Nx)

    def dT(self, z, x, y):
        return self.nab(z, self.T(x, y)) ^ self.T(self.nab(z, x), y) ^ self.T(x, self.nab(z, y))

    def dU(self, z, x):
        return self.nab(z, self.U(x)) ^ self.T(self.nab(z, x), x)

    def dR(self, z, x, y):
        Nz, Rxy = self.op(z), self.R(x, y)
        return self.mm(Nz, Rxy) ^ self.R(self.nab(z, x), y) ^ self.R(x, self.nab(z, y)) ^ self.mm(Rxy, Nz)

    def dS(self, z, x):
        Nz, Sx = self.op(z), self.S(x)
        return self.mm(Nz, Sx) ^ self.R(self.nab(z, x), x) ^ self.mm(Sx, Nz)

    def asso(self, x, y, z):
        return self.nab(self.nab(x, y), z) ^ self.nab(x, self.nab(y, z))


def _tensors(g: LieSuperalgebra, nabla: np.ndarray):
    """n3[a,b,k] = (nabla_a e_b)_k, T[a,b,k], R[a,b,k,l] = (R(e_a,e_b))_{kl}."""
    F = g.field
    n3 = np.transpose(nabla, (0, 2, 1))
    T = n3 ^ np.transpose(n3, (1, 0, 2)) ^ g.c
    NN = einsum2(F, "akm,bml->abkl", nabla, nabla)
    R = einsum2(F, "abm,mkl->abkl", g.c, nabla) ^ NN ^ np.transpose(NN, (1, 0, 2, 3))
    return n3, T, R


def _cubic_identities(g: LieSuperalgebra, n: Connection, rep: VerificationReport) -> None:
    """The identities with three independent slots, evaluated on all basis triples at once.

    Every array below is indexed [x, y, z, k] (k the output coordinate),
    or [x, y, z, k, l] for operators.
    """
    F = g.field
    e = lambda spec, A, B: einsum2(F, spec, A, B)  # noqa: E731
    n3, T, R = _tensors(g, n.nabla)
    bar = _dual_array(g, n.nabla)
    nb3, Tb, Rb = _tensors(g, bar)
    Rv = np.transpose(R, (0, 1, 3, 2))  # Rv[a,b,c,k] = (R(e_a,e_b) e_c)_k
    Rbv = np.transpose(Rb, (0, 1, 3, 2))
    # dT[z,x,y,k] = nabla_z T(x,y) + T(nabla_z x, y) + T(x, nabla_z y)
    dT = e("xym,zmk->zxyk", T, n3) ^ e("zxm,myk->zxyk", n3, T) ^ e("zym,xmk->zxyk", n3, T)
    # dR[z,x,y] = N_z R(x,y) + R(N_z x, y) + R(x, N_z y) + R(x,y) N_z
    dR = (
        e("zkm,xyml->zxykl", n.nabla, R)
        ^ e("zxm,mykl->zxykl", n3, R)
        ^ e("zym,xmkl->zxykl", n3, R)
        ^ e("xykm,zml->zxykl", R, n.nabla)
    )
    TT = e("yzm,xmk->xyzk", T, T)  # T(x, T(y,z))
    cyc = lambda A: A ^ np.transpose(A, (1, 2, 0) + tuple(range(3, A.ndim))) ^ np.transpose(  # noqa: E731
        A, (2, 0, 1) + tuple(range(3, A.ndim))
    )

    def check(name, lhs, rhs):
        bad = np.argwhere(np.any((lhs != rhs).reshape(lhs.shape[:3] + (-1,)), axis=3))
        rep.count(name, int(np.prod(lhs.shape[:3])))
        for x, y, z in bad:
            rep.fail(name, (g.names[x], g.names[y], g.names[z]))

    # propA: (nabla_z T)(x,y) = Rbar(x,y)z + R(y,z)x + R(z,x)y, indexed [x,y,z]
    dT_xyz = np.transpose(dT, (1, 2, 0, 3))
    rhs = Rbv ^ np.transpose(Rv, (2, 0, 1, 3)) ^ np.transpose(Rv, (1, 2, 0, 3))
    check("propA-torsion", dT_xyz, rhs)
    # propB: cyc T(x,T(y,z)) = cyc R(x,y)z + cyc Rbar(x,y)z
    check("propB-cyclic", cyc(TT), cyc(Rv ^ Rbv))
    # first Bianchi: cyc (nabla_z T)(x,y) = cyc R(z,x)y + cyc T(z,T(x,y))
    Rzxy = np.transpose(Rv, (1, 2, 0, 3))  # [x,y,z] -> R(z,x)y
    TzTxy = np.transpose(TT, (1, 2, 0, 3))  # [x,y,z] -> T(z,T(x,y))
    check("bianchi1-cyclic", cyc(dT_xyz), cyc(Rzxy ^ TzTxy))
    # second Bianchi: cyc (nabla_z R)(x,y) = cyc R(z, T(x,y))
    RzT = e("xym,zmkl->xyzkl", T, R)
    check("bianchi2-cyclic", cyc(np.transpose(dR, (1, 2, 0, 3, 4))), cyc(RzT))
    # Asso(x,y,z) + Asso(y,x,z) = R(x,y)z + nabla_{T(x,y)} z
    asso = e("xym,mzk->xyzk", n3, n3) ^ e("yzm,xmk->xyzk", n3, n3)
    check("associator-bracket", asso ^ np.transpose(asso, (1, 0, 2, 3)), Rv ^ e("xym,mzk->xyzk", T, n3))


# -- post-Lie superalgebras -------------------------------------------------------
@dataclass
class PostLie:
    base: LieSuperalgebra  # ({.,.}, s)
    product: Product  # *


def verify_post_lie(pl: PostLie) -> VerificationReport:
    g, p = pl.base, pl.product
    F, N = g.field, g.dim
    rep = VerificationReport(subject="post-Lie")
    basis = [g.e(i) for i in range(N)]
    for i, j, k in itertools.product(range(N), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        where = (g.names[i], g.names[j], g.names[k])
        # (i) {x,y}*z = Asso(y,x,z) + Asso(x,y,z)
        from .leftsym import associator

        if not np.array_equal(p.mul(g.bracket(x, y), z), associator(p, y, x, z) ^ associator(p, x, y, z)):
            rep.fail("axiom-i", where)
        # (iii) x*{y,z} = {x*y,z} + {y,x*z}
        if not np.array_equal(p.mul(x, g.bracket(y, z)), g.bracket(p.mul(x, y), z) ^ g.bracket(y, p.mul(x, z))):
            rep.fail("axiom-iii", where)
    for lab, x in _odd_tests(g):
        Lx = p.left_mult(x)
        # (ii) s(x)*y = x*(x*y) + (x*x)*y
        if not np.array_equal(p.left_mult(g._square(x)), F.matmul(Lx, Lx) ^ p.left_mult(p.mul(x, x))):
            rep.fail("axiom-ii", (lab,))
        # (iv) y*s(x) = {y*x, x}
        for k in range(N):
            y = basis[k]
            if not np.array_equal(p.mul(y, g._square(x)), g.bracket(p.mul(y, x), x)):
                rep.fail("axiom-iv", (g.names[k], lab))
    return rep


def associated_lie(pl: PostLie) -> LieSuperalgebra:
    """[x,y] = x*y + y*x + {x,y},  s~(x) = x*x + s(x)."""
    rep = verify_post_lie(pl)
    if not rep.ok:
        raise NotPostLie(rep.summary())
    g, p = pl.base, pl.product
    N = g.dim
    c = g.c ^ p.a ^ np.transpose(p.a, (1, 0, 2))
    for i in range(N):
        c[i, i] = 0
    sq = g.sq.copy()
    for i in g.odd_indices():
        sq[i] = g.sq[i] ^ p.a[i, i]
    out = LieSuperalgebra(g.field, g.m, g.n, c, sq, g.names, f"assoc({g.name})" if g.name else "")
    lie = verify_lie(out)
    if not lie.ok:
        raise AssertionError(f"associated bracket fails: {lie.summary()}")
    return out


def post_lie_from_flat_parallel(g: LieSuperalgebra, n: Connection) -> PostLie:
    """{x,y} = T(x,y), s = U, x*y = nabla_x y."""
    if not (is_flat(g, n) and is_parallel(g, n)):
        raise NotFlatParallel("connection must be flat and parallel")
    geo = Geometry(g, n)
    N = g.dim
    c = np.zeros((N, N, N), dtype=np.int64)
    for i, j in itertools.combinations(range(N), 2):
        c[i, j] = c[j, i] = geo.T(g.e(i), g.e(j))
    sq = np.zeros((N, N), dtype=np.int64)
    for i in g.odd_indices():
        sq[i] = geo.U(g.e(i))
    base = LieSuperalgebra(g.field, g.m, g.n, c, sq, g.names, f"torsion({g.name})" if g.name else "")
    pl = PostLie(base, n.to_product())
    rep = verify_post_lie(pl)
    if not rep.ok:
        raise AssertionError(f"flat parallel connection did not give post-Lie data: {rep.summary()}")
    return pl


def derivation_semidirect_check(pl: PostLie) -> VerificationReport:
    """x -> (l_x, x) into Der(n) x n respects bracket and squaring.

    The target bracket is [(f,x),(h,y)] = ([f,h], f(y) + h(x) + {x,y}) and
    the squaring is (f,x) -> (f o f, s(x) + f(x)).
    """
    g, p = pl.base, pl.product
    F, N = g.field, g.dim
    rep = VerificationReport(subject="semidirect embedding")
    for i in range(N):
        d = derivation_failures(g, p.left[i])
        if not d.ok:
            rep.fail("derivation", (g.names[i],))
    lie = associated_lie(pl)
    for i, j in itertools.combinations_with_replacement(range(N), 2):
        x, y = g.e(i), g.e(j)
        Lx, Ly = p.left[i], p.left[j]
        img = (p.left_mult(lie.bracket(x, y)), lie.bracket(x, y))
        tgt = (F.matmul(Lx, Ly) ^ F.matmul(Ly, Lx), p.mul(x, y) ^ p.mul(y, x) ^ g.bracket(x, y))
        if not (np.array_equal(img[0], tgt[0]) and np.array_equal(img[1], tgt[1])):
            rep.fail("bracket", (g.names[i], g.names[j]))
    for lab, x in _odd_tests(g):
        Lx = p.left_mult(x)
        sx = lie._square(x)
        img = (p.left_mult(sx), sx)
        tgt = (F.matmul(Lx, Lx), g._square(x) ^ p.mul(x, x))
        if not (np.array_equal(img[0], tgt[0]) and np.array_equal(img[1], tgt[1])):
            rep.fail("squaring", (lab,))
    return rep
