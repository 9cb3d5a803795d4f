"""Finite fields GF(2^k) with bit-packed elements.

An element is an int whose bit i is the coefficient of x^i modulo the
field's defining polynomial.  Arithmetic on numpy integer arrays is
vectorised through log/antilog tables, which makes matrix work over
GF(4) and friends almost as cheap as over GF(2).
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DegreeOutOfRange, DivisionByZero, FieldMismatch, ReducibleModulus

MAX_DEGREE = 16

# Low-weight irreducible polynomials, bit i = coefficient of x^i.
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible(modulus: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    k = modulus.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if poly_mod(modulus, p) == 0:
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class GF2k:
    """The field GF(2^k) defined by an irreducible modulus."""

    def __init__(self, k: int, modulus: int | None = None):
        if not 1 <= k <= MAX_DEGREE:
            raise DegreeOutOfRange(f"degree {k} outside 1..{MAX_DEGREE}")
        if modulus is None:
            modulus = DEFAULT_MODULI[k]
        if modulus.bit_length() - 1 != k:
            raise ReducibleModulus(f"modulus {modulus:#x} does not have degree {k}")
        if not is_irreducible(modulus):
            raise ReducibleModulus(f"modulus {modulus:#x} is reducible")
        self.k = k
        self.modulus = modulus
        self.q = 1 << k
        self._build_tables()

    def _slow_mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        gen = 1
        if order > 1:
            factors = _prime_factors(order)
            for g in range(2, q):
                if all(self._slow_pow(g, order // p) != 1 for p in factors):
                    gen = g
                    break
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[order : 2 * order] = exp[:order]
        self.generator = gen
        self._exp = exp
        self._log = log
        self._order = order
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = exp[(order - log[a]) % order]
        self._inv = inv

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    # -- identity ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, GF2k) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF2k({self.k}, {self.modulus:#x})"

    def header(self) -> str:
        return f"field 2^{self.k} {self.modulus:#x}"

    def check_same(self, other: "GF2k") -> None:
        if self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")

    # -- scalar and vectorised arithmetic --------------------------------
    def mul(self, a, b):
        if self.k == 1:
            return a & b
        if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
            if a == 0 or b == 0:
                return 0
            return int(self._exp[self._log[a] + self._log[b]])
        a = np.asarray(a)
        b = np.asarray(b)
        r = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        if isinstance(a, (int, np.integer)):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return int(self._inv[a])
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def square(self, a):
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        return int(self._exp[(self._log[a] * e) % self._order])

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(self, bits)

    def parse(self, text: str) -> int:
        """Read a hex element encoding such as ``3`` or ``0x3``."""
        v = int(text, 16)
        if not 0 <= v < self.q:
            raise ValueError(f"element {text!r} not in {self!r}")
        return v

    def fmt(self, a: int) -> str:
        return format(int(a), "x")

    # -- linear algebra helpers on int arrays ----------------------------
    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return (A @ B) & 1
        if A.ndim == 1:
            return self.matmul(A[None, :], B)[0]
        if B.ndim == 1:
            return self.matmul(A, B[:, None])[:, 0]
        if A.shape[1] == 0:
            return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        prod = self.mul(A[:, :, None], B[None, :, :])
        return np.bitwise_xor.reduce(prod, axis=1)

    def scale(self, c, v):
        return self.mul(c, np.asarray(v, dtype=np.int64))

    def dot(self, u, v) -> int:
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.size == 0:
            return 0
        return int(np.bitwise_xor.reduce(self.mul(u, v)))

    def xor_sum(self, arr, axis=0):
        arr = np.asarray(arr, dtype=np.int64)
        if arr.shape[axis] == 0:
            shape = list(arr.shape)
            del shape[axis]
            return np.zeros(shape, dtype=np.int64)
        return np.bitwise_xor.reduce(arr, axis=axis)


@lru_cache(maxsize=None)
def gf(k: int, modulus: int | None = None) -> GF2k:
    """Cached field constructor so equal fields share tables."""
    return GF2k(k, modulus)


def parse_field_spec(text: str, modulus: str | None = None) -> GF2k:
    """Accept ``2^k`` (optionally with a hex modulus)."""
    text = text.strip()
    if not text.startswith("2^"):
        raise ValueError(f"field must look like 2^k, got {text!r}")
    k = int(text[2:])
    return gf(k, int(modulus, 16) if modulus else None)


class FieldElement:
    """A value object for one element, convenient at API boundaries."""

    __slots__ = ("field", "bits")

    def __init__(self, field: GF2k, bits: int):
        if not 0 <= bits < field.q:
            raise ValueError(f"{bits} is not an element of {field!r}")
        self.field = field
        self.bits = int(bits)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field.check_same(other.field)
            return other.bits
        if isinstance(other, (int, np.integer)):
            return int(other) & 1 if self.field.k == 1 else int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.bits ^ o)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.bits, o))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.bits))

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.bits, o))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.bits, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.bits == other.bits
        if isinstance(other, (int, np.integer)):
            return self.bits == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.bits))

    def __int__(self) -> int:
        return self.bits

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"FieldElement(0x{self.bits:x})"

    def __str__(self) -> str:
        return format(self.bits, "x")
