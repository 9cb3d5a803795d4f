"""Named algebras, products, connections and cocycles shipped as text data.

Entries live in ``catalog/data/*.txt`` in the format of
:mod:`superlie2.textfmt`.  :func:`load` instantiates an entry over a field
with parameter bindings, verifies it and returns the objects.  The
reproduction harness lives in :mod:`superlie2.catalog.harness`.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from ..errors import ConstraintViolation, ParseError, UnknownEntry, VerificationFailure
from ..field import GF2k, gf
from ..textfmt import (
    Document,
    Line,
    build_algebra,
    cocycle_blocks,
    eval_scalar,
    eval_vector,
    form_blocks,
    split_documents,
    subspace_rows,
    table_block,
)

DATA_FILES = ("dim2.txt", "lss.txt", "lagcoh.txt", "ext4.txt", "examples.txt")
STRUCTURE_KEYS = {"sdim", "basis", "bracket", "squaring"}


# -- parameters and conditions --------------------------------------------------------
@dataclass(frozen=True)
class Condition:
    """``name = v`` or ``name != v1,v2`` on a single parameter."""

    name: str
    op: str
    values: tuple[int, ...]

    def holds(self, bindings: dict[str, int]) -> bool:
        v = bindings.get(self.name)
        if v is None:
            return True
        inside = v in self.values
        return inside if self.op == "=" else not inside

    def __str__(self) -> str:
        return f"{self.name} {self.op} {','.join(str(v) for v in self.values)}"


def parse_condition(text: str, line: int | None = None) -> Condition:
    op = "!=" if "!=" in text else "="
    if op not in text:
        raise ParseError(f"cannot read condition {text!r}", line)
    lhs, rhs = (s.strip() for s in text.split(op, 1))
    try:
        values = tuple(int(v.strip(), 16) for v in rhs.split(",") if v.strip())
    except ValueError:
        raise ParseError(f"condition values must be field literals: {rhs!r}", line) from None
    return Condition(lhs, op, values)


@dataclass(frozen=True)
class Param:
    name: str
    excluded: tuple[int, ...] = ()

    def admissible(self, F: GF2k) -> list[int]:
        return [a for a in F.elements() if a not in self.excluded]

    def __str__(self) -> str:
        return self.name + (f" != {','.join(str(v) for v in self.excluded)}" if self.excluded else "")


@dataclass
class Expectation:
    key: str
    value: str
    when: Condition | None
    line: int


# -- entries --------------------------------------------------------------------------
@dataclass
class CatalogEntry:
    name: str
    table: str
    source: str  # file:line
    doc: Document
    params: list[Param] = field(default_factory=list)
    foralls: list[str] = field(default_factory=list)
    expectations: list[Expectation] = field(default_factory=list)
    algebra_ref: str | None = None
    kind: str | None = None
    base: str | None = None

    def admissible_bindings(self, F: GF2k) -> list[dict[str, int]]:
        names = [p.name for p in self.params]
        pools = [p.admissible(F) for p in self.params]
        return [dict(zip(names, vals)) for vals in itertools.product(*pools)]

    def expected(self, key: str, bindings: dict[str, int]) -> list[Expectation]:
        return [e for e in self.expectations if e.key == key and (e.when is None or e.when.holds(bindings))]

    def check_bindings(self, F: GF2k, bindings: dict[str, int]) -> dict[str, int]:
        out = {}
        known = {p.name: p for p in self.params}
        for k in bindings:
            if k not in known:
                raise ConstraintViolation(f"{self.name} has no parameter {k!r}")
        for p in self.params:
            if p.name not in bindings:
                raise ConstraintViolation(f"{self.name} needs a value for {p.name} ({p})")
            v = int(bindings[p.name])
            if not 0 <= v < F.q:
                raise ConstraintViolation(f"{p.name}={v:#x} is not an element of GF(2^{F.k})")
            if v in p.excluded:
                raise ConstraintViolation(f"{self.name} requires {p}; got {p.name}={F.fmt(v)}")
            out[p.name] = v
        return out


def _entry_from_doc(doc: Document, fname: str) -> CatalogEntry:
    e = CatalogEntry(doc.name, doc.meta("table", "") or "", f"{fname}:{doc.start}", doc)
    for ln in doc.lines:
        if ln.key == "param":
            if not ln.args:
                raise ParseError("param needs a name", ln.no)
            excl: tuple[int, ...] = ()
            if len(ln.args) > 1:
                excl = parse_condition(" ".join(ln.args), ln.no).values
            e.params.append(Param(ln.args[0], excl))
        elif ln.key == "forall":
            e.foralls.extend(ln.args)
        elif ln.key == "expect":
            key = " ".join(ln.args)
            rhs = ln.rhs or ""
            when = None
            if " when " in f" {rhs} ":
                rhs, cond = rhs.split("when", 1)
                when = parse_condition(cond.strip(), ln.no)
            e.expectations.append(Expectation(key, rhs.strip(), when, ln.no))
        elif ln.key == "algebra":
            e.algebra_ref = " ".join(ln.args)
        elif ln.key == "kind":
            e.kind = ln.args[0]
        elif ln.key == "base":
            e.base = " ".join(ln.args)
    return e


class Catalog:
    """All shipped entries, indexed by name."""

    def __init__(self, texts: dict[str, str]):
        self.entries: dict[str, CatalogEntry] = {}
        for fname, text in texts.items():
            for doc in split_documents(text):
                if not doc.name:
                    continue
                if doc.name in self.entries:
                    raise ParseError(f"duplicate catalog entry {doc.name!r} in {fname}", doc.start)
                self.entries[doc.name] = _entry_from_doc(doc, fname)

    def get(self, name: str) -> CatalogEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise UnknownEntry(f"unknown catalog entry {name!r} (see: superlie2 emit list)") from None

    def names(self, table: str | None = None) -> list[str]:
        return [n for n, e in self.entries.items() if table is None or e.table == table]

    def structure_doc(self, entry: CatalogEntry) -> Document:
        """The entry's document with the referenced algebra's structure merged in."""
        if entry.doc.basis or entry.algebra_ref is None:
            return entry.doc
        ref = self.get(entry.algebra_ref).doc
        merged = Document(entry.name, ref.field_spec, ref.sdim, list(ref.basis), [], entry.doc.start)
        merged.lines = [ln for ln in ref.lines if ln.key in STRUCTURE_KEYS] + list(entry.doc.lines)
        return merged


@lru_cache(maxsize=1)
def catalog() -> Catalog:
    pkg = resources.files(__name__) / "data"
    return Catalog({f: (pkg / f).read_text(encoding="utf-8") for f in DATA_FILES})


def entry(name: str) -> CatalogEntry:
    return catalog().get(name)


# -- loading --------------------------------------------------------------------------
@dataclass
class Loaded:
    """A catalog entry instantiated over a field."""

    entry: CatalogEntry
    field: GF2k
    bindings: dict[str, int]
    algebra: object
    product: object | None = None
    connection: object | None = None
    forms: list = field(default_factory=list)
    cocycles: list = field(default_factory=list)
    named_cocycles: dict = field(default_factory=dict)  # label -> (kind, alpha, gamma)
    ideal: np.ndarray | None = None
    complement: np.ndarray | None = None
    doc: Document | None = None

    @property
    def name(self) -> str:
        return self.entry.name

    def label(self) -> str:
        if not self.bindings:
            return self.entry.name
        return self.entry.name + "(" + ",".join(f"{k}={self.field.fmt(v)}" for k, v in self.bindings.items()) + ")"

    @property
    def form(self):
        return self.forms[0] if self.forms else None

    def polarization(self):
        from ..forms import StrongPolarization
        from ..linalg import Subspace

        if self.form is None or self.ideal is None or self.complement is None:
            return None
        F, N = self.field, self.algebra.dim
        return StrongPolarization(self.algebra, self.form, Subspace(F, N, self.ideal), Subspace(F, N, self.complement))


def _canonical_pairing(doc: Document, kind: str, base_names: list[str]):
    names = doc.basis
    dual = [f"{n}*" if kind == "even" else f"P{n}*" for n in base_names]
    N = len(names)
    G = np.zeros((N, N), dtype=np.int64)
    for b, d in zip(base_names, dual):
        if b not in names or d not in names:
            raise ParseError(f"basis of {doc.name} lacks {b} or {d}", doc.start)
        i, j = names.index(b), names.index(d)
        G[i, j] = G[j, i] = 1
    ideal = np.array([np.eye(N, dtype=np.int64)[names.index(d)] for d in dual])
    comp = np.array([np.eye(N, dtype=np.int64)[names.index(b)] for b in base_names])
    return G, ideal, comp


def load(name: str, field: GF2k | None = None, bindings: dict[str, int] | None = None, verify: bool = True) -> Loaded:
    """Instantiate and verify a catalog entry.

    Raises UnknownEntry, ConstraintViolation for inadmissible bindings and
    VerificationFailure when the payload fails its verifier.
    """
    from ..connections import Connection, is_flat
    from ..forms import BilinearForm
    from ..leftsym import Product, is_left_symmetric
    from ..superalg import verify_lie

    cat = catalog()
    e = cat.get(name)
    F = field or gf(1)
    b = e.check_bindings(F, dict(bindings or {}))
    doc = cat.structure_doc(e)
    g = build_algebra(doc, F, b, e.name)
    if verify:
        rep = verify_lie(g)
        if not rep.ok:
            raise VerificationFailure(f"{e.name}: {rep.summary()}", rep)
    out = Loaded(e, F, b, g, doc=doc)
    names = doc.basis
    t = table_block(doc, "prod", F, names, b)
    if t is not None:
        out.product = Product.like(g, t, e.name)
        if verify:
            rep = is_left_symmetric(out.product)
            if not rep.ok:
                raise VerificationFailure(f"{e.name}: {rep.summary()}", rep)
    t = table_block(doc, "nabla", F, names, b)
    if t is not None:
        out.connection = Connection(g, np.transpose(t, (0, 2, 1)), e.name)
        if verify and not is_flat(g, out.connection):
            raise VerificationFailure(f"{e.name}: connection is not flat")
    out.forms = [BilinearForm.on(g, G) for _, G in form_blocks(doc, F, names, b)]
    out.cocycles = cocycle_blocks(doc, F, names, b)
    out.named_cocycles = cocycle_blocks(doc, F, names, b, named=True)
    out.ideal = subspace_rows(doc, "ideal", F, names, b)
    out.complement = subspace_rows(doc, "complement", F, names, b)
    if e.kind is not None and e.base is not None:
        base_names = cat.structure_doc(cat.get(e.base)).basis
        G, ideal, comp = _canonical_pairing(doc, e.kind, base_names)
        out.forms.insert(0, BilinearForm.on(g, G))
        out.ideal, out.complement = ideal, comp
    return out


def instances(name: str, field: GF2k, verify: bool = True) -> list[Loaded]:
    """The entry at every admissible binding over the field."""
    e = entry(name)
    return [load(name, field, b, verify) for b in e.admissible_bindings(field)]


def labelled_cochain(ld: Loaded, fh, expr: str):
    """Sum of the entry's labelled cochains, e.g. ``alpha2+gamma31``; ``0`` terms are skipped."""
    from ..lagrange import cochain

    c = None
    for part in re.split(r"[+,]", expr):
        part = part.strip()
        if part in ("", "0"):
            continue
        if part not in ld.named_cocycles:
            known = ", ".join(ld.named_cocycles) or "none"
            raise UnknownEntry(f"no cochain labelled {part!r} on {ld.name} (known: {known})")
        kind, alpha, gamma = ld.named_cocycles[part]
        t = cochain(fh, kind, alpha, gamma)
        c = t if c is None else c + t
    return c if c is not None else cochain(fh, "even")


# -- squaring claims --------------------------------------------------------------------
@dataclass
class ClaimResult:
    text: str
    bindings: dict
    expected: np.ndarray
    computed: np.ndarray

    @property
    def ok(self) -> bool:
        return bool(np.array_equal(self.expected, self.computed))


def check_claims(ld: Loaded) -> list[ClaimResult]:
    """Evaluate ``claim squaring v = w`` lines for every value of the forall symbols."""
    F, g, doc = ld.field, ld.algebra, ld.doc
    out = []
    for ln in doc.of("claim"):
        if not ln.args or ln.args[0] != "squaring":
            raise ParseError("only 'claim squaring <vector> = <vector>' is supported", ln.no)
        vec_text = "".join(ln.args[1:])
        for vals in itertools.product(F.elements(), repeat=len(ld.entry.foralls)):
            params = dict(ld.bindings)
            params.update(zip(ld.entry.foralls, vals))
            x = eval_vector(F, vec_text, doc.basis, params, ln.no)
            y = eval_vector(F, ln.rhs or "", doc.basis, params, ln.no, ln.rhs_col)
            out.append(ClaimResult(f"s({vec_text}) = {ln.rhs}", params, y, g._square(x)))
    return out


def emit(name: str, field: GF2k | None = None, bindings: dict[str, int] | None = None) -> str:
    """Text of an instantiated entry in the algebra file format."""
    from ..textfmt import emit_algebra, emit_cocycle, emit_connection, emit_form, emit_product, emit_subspace

    ld = load(name, field, bindings)
    g = ld.algebra
    F = ld.field
    parts = [f"# {ld.label()}\n", emit_algebra(g)]
    if ld.product is not None:
        parts.append(emit_product(ld.product))
    if ld.connection is not None:
        parts.append(emit_connection(ld.connection))
    for w in ld.forms:
        parts.append(emit_form(w, list(g.names), F))
    if ld.ideal is not None:
        parts.append(emit_subspace("ideal", F, ld.ideal, list(g.names)))
    if ld.complement is not None:
        parts.append(emit_subspace("complement", F, ld.complement, list(g.names)))
    for kind, alpha, gamma in ld.cocycles:
        parts.append(_cocycle_text(g, kind, alpha, gamma))
    for label, (kind, alpha, gamma) in ld.named_cocycles.items():
        parts.append(_cocycle_text(g, kind, alpha, gamma, label))
    return "".join(parts)


def _cocycle_text(g, kind: str, alpha: dict, gamma: dict, label: str = "") -> str:
    from ..textfmt import dual_names, fmt_vector

    names = list(g.names)
    mn = dual_names(names, kind)
    out = [f"cocycle {kind} {label}".rstrip()]
    for (i, j), v in sorted(alpha.items()):
        out.append(f"alpha {names[i]} {names[j]} = {fmt_vector(g.field, v, mn)}")
    for i, v in sorted(gamma.items()):
        out.append(f"gamma {names[i]} = {fmt_vector(g.field, v, mn)}")
    return "\n".join(out) + "\n"


from .hamiltonian import Hamiltonian, build_hamiltonian  # noqa: E402
from .dim2 import Dim2Class, classify_dim2  # noqa: E402

__all__ = [
    "Catalog",
    "CatalogEntry",
    "ClaimResult",
    "Condition",
    "Dim2Class",
    "Hamiltonian",
    "Loaded",
    "Param",
    "build_hamiltonian",
    "catalog",
    "check_claims",
    "classify_dim2",
    "emit",
    "entry",
    "instances",
    "load",
]
