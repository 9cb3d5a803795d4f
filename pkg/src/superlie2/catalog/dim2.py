"""Brute-force classification of 2-dimensional Lie superalgebras."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..field import GF2k
from ..iso import find_isomorphism
from ..superalg import LieSuperalgebra, verify_lie

SDIMS = ((1, 1), (2, 0), (0, 2))


@dataclass
class Dim2Class:
    sdim: tuple[int, int]
    representative: LieSuperalgebra
    name: str | None  # matching catalog entry, if any
    members: int = 1  # structure tuples in this class


@dataclass
class Dim2Result:
    field: GF2k
    tuples: dict[tuple[int, int], int] = field(default_factory=dict)  # all candidate tuples
    valid: dict[tuple[int, int], int] = field(default_factory=dict)  # passing verify_lie
    classes: list[Dim2Class] = field(default_factory=list)

    def count(self, sdim: tuple[int, int]) -> int:
        return sum(1 for c in self.classes if c.sdim == sdim)


def _slots(m: int, n: int) -> list[tuple[str, int, int, int]]:
    """Parity-respecting structure constants on a 2-dim superspace."""
    N = m + n
    par = [0] * m + [1] * n
    out = []
    for i, j in itertools.combinations(range(N), 2):
        for k in range(N):
            if par[k] == (par[i] + par[j]) % 2:
                out.append(("c", i, j, k))
    for i in range(m, N):
        for k in range(m):
            out.append(("s", i, i, k))
    return out


def _algebra(F: GF2k, m: int, n: int, slots, vals) -> LieSuperalgebra:
    N = m + n
    c = np.zeros((N, N, N), dtype=np.int64)
    sq = np.zeros((N, N), dtype=np.int64)
    for (kind, i, j, k), v in zip(slots, vals):
        if kind == "c":
            c[i, j, k] = c[j, i, k] = v
        else:
            sq[i, k] = v
    return LieSuperalgebra(F, m, n, c, sq)


def classify_dim2(F: GF2k, names: bool = True) -> Dim2Result:
    """Enumerate every structure tuple, keep the Lie ones, group by isomorphism."""
    from . import catalog, load

    res = Dim2Result(F)
    refs: list[tuple[str, LieSuperalgebra]] = []
    if names:
        refs = [(n, load(n, F).algebra) for n in catalog().names("dim2")]
    for m, n in SDIMS:
        slots = _slots(m, n)
        res.tuples[(m, n)] = F.q ** len(slots)
        valid = 0
        classes: list[Dim2Class] = []
        for vals in itertools.product(F.elements(), repeat=len(slots)):
            g = _algebra(F, m, n, slots, vals)
            if not verify_lie(g).ok:
                continue
            valid += 1
            for c in classes:
                if find_isomorphism(g, c.representative) is not None:
                    c.members += 1
                    break
            else:
                classes.append(Dim2Class((m, n), g, None))
        res.valid[(m, n)] = valid
        for c in classes:
            for nm, ref in refs:
                if ref.sdim == c.representative.sdim and find_isomorphism(c.representative, ref) is not None:
                    c.name = nm
                    c.representative = c.representative.with_name(nm)
                    break
        res.classes.extend(classes)
    return res
