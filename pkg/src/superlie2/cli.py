"""Command-line interface: ``superlie2 COMMAND [options]``.

Exit codes: 0 success, 1 verification failure or table mismatch,
2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConstraintViolation, ParseError, Superlie2Error, UnknownEntry, VerificationFailure
from .field import GF2k, gf, parse_field_spec

FORMATS = """\
file formats (line based, '#' starts a comment, vectors are sums like e1 + 3*e2):
  field 2^k 0x<modulus>           optional; defaults to --field
  sdim m n                        even and odd dimension
  basis e1 e2 | e3                even names, '|', odd names
  param eps                       symbol bound with --param eps=0x2
  bracket ei ej = <vector>        [ei, ej] for i != j
  squaring ei = <vector>          s(ei) for odd ei
  prod ei ej = <vector>           left-symmetric product ei |> ej
  nabla ei ej = <vector>          connection nabla_{ei} ej
  form even|odd                   then lines  w ei ej = <scalar>
  ideal <vector>; <vector>        Lagrangian ideal, rows separated by ';'
  complement <vector>; ...        Lagrangian complement
  cocycle even|odd [label]        then lines  alpha ei ej = <covector>
                                  and  gamma ei = <covector>, covectors named
                                  ei* (even kind) or Pei* (odd kind)
coefficients are hex words of the bit-packed polynomial (over GF(4), 2 is a and
3 is a+1) or expressions in declared params using + * / ** and parentheses.
"""


class UsageError(Exception):
    pass


# -- output ---------------------------------------------------------------------------
class Out:
    """Human lines or JSON records with a fixed key order."""

    def __init__(self, machine: bool, command: str):
        self.machine = machine
        self.command = command
        self.failed = False

    def check(self, item: str, check: str, ok: bool, detail: str = "") -> None:
        self.failed |= not ok
        status = "pass" if ok else "FAIL"
        if self.machine:
            self._emit({"command": self.command, "item": item, "check": check, "status": status, "detail": detail})
        else:
            print(f"{check}: {status}" + (f"  ({detail})" if detail else ""))

    def value(self, item: str, key: str, value) -> None:
        if self.machine:
            self._emit({"command": self.command, "item": item, "key": key, "value": value})
        else:
            print(f"{key}: {value}")

    def text(self, item: str, key: str, body: str) -> None:
        if self.machine:
            self._emit({"command": self.command, "item": item, "key": key, "text": body})
        else:
            sys.stdout.write(body if body.endswith("\n") else body + "\n")

    def _emit(self, rec: dict) -> None:
        print(json.dumps(rec, sort_keys=False))


# -- inputs ---------------------------------------------------------------------------
@dataclass
class Source:
    label: str
    algebra: object
    product: object | None = None
    connection: object | None = None
    forms: list = field(default_factory=list)
    cocycles: list = field(default_factory=list)
    named_cocycles: dict = field(default_factory=dict)
    ideal: np.ndarray | None = None
    complement: np.ndarray | None = None
    entry_name: str | None = None


def _field(args) -> GF2k | None:
    if args.field is None:
        return None
    try:
        return parse_field_spec(args.field, args.modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _bindings(F: GF2k, items: list[str] | None) -> dict[str, int]:
    out = {}
    for item in items or []:
        for part in item.split(","):
            if not part.strip():
                continue
            if "=" not in part:
                raise UsageError(f"--param expects name=value, got {part!r}")
            k, v = part.split("=", 1)
            try:
                out[k.strip()] = F.parse(v.strip())
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    return out


def _from_catalog(name: str, F: GF2k, bindings: dict) -> Source:
    from .catalog import load

    ld = load(name, F, bindings, verify=False)
    return Source(
        ld.label(), ld.algebra, ld.product, ld.connection, list(ld.forms), list(ld.cocycles), dict(ld.named_cocycles),
        ld.ideal, ld.complement, ld.entry.name,
    )


def _from_file(path: str, F: GF2k | None, params: dict) -> Source:
    from .textfmt import cocycle_blocks, parse_document, read_algebra_file

    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    af = read_algebra_file(text, F or gf(1), params, verify=False)
    doc = parse_document(text)
    named = cocycle_blocks(doc, af.algebra.field, doc.basis, params, named=True)
    return Source(path, af.algebra, af.product, af.connection, af.forms, af.cocycles, named, af.ideal, af.complement)


def _source(args, required: bool = True) -> Source | None:
    F = _field(args) or gf(1)
    if args.catalog and args.input:
        raise UsageError("give either a file or --catalog, not both")
    if args.catalog:
        return _from_catalog(args.catalog, F, _bindings(F, args.param))
    if args.input:
        return _from_file(args.input, _field(args), _bindings(F, args.param))
    if required:
        raise UsageError("an input file or --catalog NAME is required")
    return None


def _flat(src: Source, allow_torsion: bool = False):
    from .connections import Connection
    from .lagrange import FlatLieSuperalgebra

    conn = src.connection
    if conn is None and src.product is not None:
        conn = Connection.from_product(src.algebra, src.product)
    if conn is None:
        raise UsageError(f"{src.label} has no connection or product block")
    return FlatLieSuperalgebra(src.algebra, conn, require_torsion_free=not allow_torsion)


# -- commands -------------------------------------------------------------------------
def cmd_verify(args, out: Out) -> None:
    from .connections import is_flat, is_torsion_free
    from .forms import classify_form, is_closed
    from .leftsym import is_compatible, is_left_symmetric
    from .superalg import verify_lie

    src = _source(args)
    g, F = src.algebra, src.algebra.field
    rep = verify_lie(g)
    out.check(src.label, "Lie axioms", rep.ok, "" if rep.ok else rep.summary())
    if src.product is not None:
        r = is_left_symmetric(src.product)
        out.check(src.label, "left-symmetric", r.ok, "" if r.ok else r.summary())
        out.check(src.label, "compatible", is_compatible(src.product, g))
    if src.connection is not None:
        out.check(src.label, "connection flat", is_flat(g, src.connection))
        out.value(src.label, "connection torsion-free", "yes" if is_torsion_free(g, src.connection) else "no")
    for t, w in enumerate(src.forms, 1):
        c = is_closed(g, w)
        out.check(src.label, f"form {t} closed", c.ok, "" if c.ok else c.summary())
        out.check(src.label, f"form {t} nondegenerate", w.is_nondegenerate(F))
        out.value(src.label, f"form {t} type", classify_form(w).kind)
    if src.forms and src.ideal is not None and src.complement is not None:
        from .forms import StrongPolarization
        from .linalg import Subspace

        N = g.dim
        pol = StrongPolarization(g, src.forms[0], Subspace(F, N, src.ideal), Subspace(F, N, src.complement))
        r = pol.check()
        out.check(src.label, "strong polarization", r.ok, "" if r.ok else r.summary())


def cmd_invariants(args, out: Out) -> None:
    from .cohomology import cohomology_dim
    from .superalg import center, derived_subalgebra, superdim_of, trivial_module

    src = _source(args)
    g = src.algebra
    K = trivial_module(g)
    out.value(src.label, "sdim", f"{g.m}|{g.n}")
    d = superdim_of(g, derived_subalgebra(g))
    z = superdim_of(g, center(g))
    out.value(src.label, "derived", f"{d[0]}|{d[1]}")
    out.value(src.label, "center", f"{z[0]}|{z[1]}")
    out.value(src.label, "XH1", cohomology_dim(g, K, 1))
    out.value(src.label, "XH2", cohomology_dim(g, K, 2))


def _module(src: Source, which: str):
    from .lagrange import dual_module
    from .superalg import adjoint_module, trivial_module

    if which == "trivial":
        return trivial_module(src.algebra)
    if which == "adjoint":
        return adjoint_module(src.algebra)
    return dual_module(_flat(src, allow_torsion=True), "even" if which == "dual" else "odd")


_PARITY = {"even": 0, "odd": 1, "all": None}


def _print_classes(out: Out, src: Source, classes, kind: str) -> None:
    from .textfmt import emit_cocycle, fmt_vector

    g = src.algebra
    for t, c in enumerate(classes, 1):
        if isinstance(c, np.ndarray):  # degree 1: d x N matrix, column i is phi(e_i)
            lines = [f"phi {g.names[i]} = {fmt_vector(g.field, c[:, i], [f'm{k + 1}' for k in range(c.shape[0])])}" for i in range(g.dim) if c[:, i].any()]
            out.text(src.label, f"class {t}", f"# class {t}\n" + "\n".join(lines or ["phi = 0"]) + "\n")
        else:
            out.text(src.label, f"class {t}", f"# class {t}\n" + emit_cocycle(c, kind))


def cmd_cohomology(args, out: Out) -> None:
    from .cohomology import cohomology

    src = _source(args)
    r = _module(src, args.module)
    coh = cohomology(src.algebra, r, args.degree, _PARITY[args.parity])
    out.value(src.label, f"dim XH{args.degree} ({args.module}, {args.parity})", coh.dim)
    _print_classes(out, src, coh.classes(), "even" if args.module != "pidual" else "odd")


def cmd_lagrangian(args, out: Out) -> None:
    from .lagrange import lagrangian_cocycle_space

    src = _source(args)
    fh = _flat(src, allow_torsion=True)
    coh = lagrangian_cocycle_space(fh, args.kind, _PARITY[args.parity])
    out.value(src.label, f"dim XH2_L ({args.kind}, {args.parity})", coh.dim)
    _print_classes(out, src, coh.classes(), args.kind)


def _connection_entry(base: str, F: GF2k, spec: str) -> "object":
    """Catalog connection on `base` selected by name or by parameter bindings."""
    from .catalog import catalog, load

    cat = catalog()
    if spec in cat.names():
        return load(spec, F)
    cands = [n for n in cat.names() if cat.get(n).algebra_ref == base and cat.get(n).doc.of("nabla")]
    if not cands:
        raise UsageError(f"no catalog connection on {base}")
    return load(cands[0], F, _bindings(F, [spec]))


def cmd_extend(args, out: Out) -> None:
    from .lagrange import ExtensionTuple, FlatLieSuperalgebra, build_extension, cochain
    from .textfmt import emit_algebra, emit_form, emit_subspace

    F = _field(args) or gf(1)
    if args.base:
        args.catalog = args.catalog or args.base
    src = _source(args)
    conn_src = src
    if args.connection:
        if Path(args.connection).is_file():
            conn_src = _from_file(args.connection, F, _bindings(F, args.param))
        else:
            base = src.entry_name or src.label
            ld = _connection_entry(base, F, args.connection)
            conn_src = Source(ld.label(), ld.algebra, ld.product, ld.connection, named_cocycles=dict(ld.named_cocycles))
    fh = _flat(conn_src)
    if not np.array_equal(fh.h.c, src.algebra.c) or not np.array_equal(fh.h.sq, src.algebra.sq):
        raise UsageError("connection is defined on a different algebra than the base")
    if args.cocycle is None:
        c = cochain(fh, args.kind)
    elif Path(args.cocycle).is_file():
        cs = _from_file(args.cocycle, F, _bindings(F, args.param)).cocycles
        if not cs:
            raise UsageError(f"{args.cocycle} has no cocycle block")
        kind, alpha, gamma = cs[0]
        c = cochain(fh, kind, alpha, gamma)
    else:
        from .catalog import labelled_cochain

        holder = type("H", (), {"named_cocycles": conn_src.named_cocycles, "name": conn_src.label})()
        c = labelled_cochain(holder, fh, args.cocycle)
    ext = build_extension(ExtensionTuple(FlatLieSuperalgebra(fh.h, fh.nabla), c, args.kind))
    g = ext.g
    names = list(g.names)
    body = emit_algebra(g) + emit_form(ext.form, names, F)
    body += emit_subspace("ideal", F, ext.polarization.lagrangian_ideal.basis, names)
    body += emit_subspace("complement", F, ext.polarization.complement.basis, names)
    out.text(src.label, "extension", body)


def cmd_extract(args, out: Out) -> None:
    from .forms import StrongPolarization, find_strong_polarizations
    from .lagrange import extract_tuple
    from .linalg import Subspace
    from .textfmt import emit_algebra, emit_cocycle, emit_connection

    src = _source(args)
    g, F = src.algebra, src.algebra.field
    if not src.forms:
        raise UsageError(f"{src.label} has no form block")
    w = src.forms[0]
    if src.ideal is None:
        raise UsageError(f"{src.label} has no ideal line")
    a = Subspace(F, g.dim, src.ideal)
    if src.complement is not None:
        pol = StrongPolarization(g, w, a, Subspace(F, g.dim, src.complement))
    else:
        found = [p for p in find_strong_polarizations(g, w) if p.lagrangian_ideal == a]
        if not found:
            raise VerificationFailure("the ideal admits no Lagrangian complement (or is not a Lagrangian ideal)")
        pol = found[0]
    ex = extract_tuple(pol, allow_torsion=args.allow_torsion)
    t = ex.tuple
    h = t.base.h
    body = emit_algebra(h) + emit_connection(t.base.nabla) + emit_cocycle(t.cocycle, t.kind)
    out.text(src.label, "tuple", body)
    if ex.extension is not None:
        out.check(src.label, "extraction isomorphism", ex.report.ok, "" if ex.report.ok else ex.report.summary())
    else:
        out.check(src.label, "torsion-free", False, "induced connection has torsion")


def cmd_classify(args, out: Out) -> None:
    from .catalog import catalog, load
    from .catalog.dim2 import classify_dim2
    from .iso import find_isomorphism

    src = _source(args, required=False)
    F = _field(args) or gf(1)
    if src is None:
        res = classify_dim2(F)
        for sd in ((1, 1), (2, 0), (0, 2)):
            s = f"{sd[0]}|{sd[1]}"
            out.value(s, f"({s}) tuples", res.tuples[sd])
            out.value(s, f"({s}) Lie tuples", res.valid[sd])
            out.value(s, f"({s}) classes", res.count(sd))
        for c in res.classes:
            out.value(c.name or "", f"class ({c.sdim[0]}|{c.sdim[1]})", f"{c.name or 'unnamed'} ({c.members} tuples)")
        return
    g = src.algebra
    hits = []
    cat = catalog()
    for n in cat.names():
        e = cat.get(n)
        if e.params or e.table in ("lss", "lagcoh"):
            continue
        try:
            ref = load(n, g.field, verify=False).algebra
        except Superlie2Error:
            continue
        if tuple(ref.sdim) == tuple(g.sdim) and find_isomorphism(g, ref) is not None:
            hits.append(n)
    out.value(src.label, "isomorphic catalog entries", ", ".join(hits) or "none")


def cmd_search_lss(args, out: Out) -> None:
    from .leftsym import enumerate_compatible_products, is_left_alternative
    from .textfmt import emit_product

    src = _source(args)
    reps = enumerate_compatible_products(src.algebra, "raw" if args.raw else "aut_orbits")
    out.value(src.label, "compatible products" + ("" if args.raw else " up to automorphism"), len(reps))
    for t, p in enumerate(reps, 1):
        la = "yes" if is_left_alternative(p) else "no"
        out.text(src.label, f"product {t}", f"# product {t} (left-alternative: {la})\n" + (emit_product(p) or "# zero product\n"))


def cmd_queerify(args, out: Out) -> None:
    from .leftsym import is_left_symmetric, lie_of_product, queerify_product
    from .textfmt import emit_algebra, emit_product

    src = _source(args)
    if src.product is None:
        raise UsageError("queerify needs a prod block (a purely even left-alternative product)")
    q = queerify_product(src.product)
    r = is_left_symmetric(q)
    out.check(src.label, "queerified product left-symmetric", r.ok)
    out.text(src.label, "queerified", emit_algebra(lie_of_product(q)) + emit_product(q))


def cmd_reproduce(args, out: Out) -> None:
    from .catalog.harness import TABLES, reproduce

    if args.table == "list":
        for t in TABLES:
            out.value(t, "table", t)
        return
    rep = reproduce(args.table)
    if out.machine:
        print(rep.json_lines())
    else:
        print(rep.format())
    out.failed |= not rep.ok


def cmd_emit(args, out: Out) -> None:
    from .catalog import catalog, emit

    if args.name in (None, "list"):
        for n in catalog().names():
            out.value(n, "entry", n)
        return
    F = _field(args) or gf(1)
    out.text(args.name, "entry", emit(args.name, F, _bindings(F, args.param)))


# -- parser ---------------------------------------------------------------------------
def _common(p: argparse.ArgumentParser, source: bool = True) -> None:
    p.add_argument("--field", help="field 2^k (default 2^1)")
    p.add_argument("--modulus", help="hex modulus for --field, e.g. 0x13")
    p.add_argument("--param", action="append", metavar="NAME=HEX", help="parameter binding, repeatable")
    p.add_argument("--machine", action="store_true", help="JSON lines with a stable key order")
    if source:
        p.add_argument("input", nargs="?", help="algebra file")
        p.add_argument("--catalog", metavar="NAME", help="use a catalog entry instead of a file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superlie2",
        description="Lie superalgebras in characteristic 2: verification, cohomology, Lagrangian extensions.",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, helptext, source=True):
        p = sub.add_parser(name, help=helptext, description=helptext, epilog=FORMATS, formatter_class=argparse.RawDescriptionHelpFormatter)
        _common(p, source)
        p.set_defaults(fn=fn)
        return p

    add("verify", cmd_verify, "check the Lie axioms and any product, connection and form blocks")
    add("invariants", cmd_invariants, "derived algebra, centre, XH^1 and XH^2 with trivial coefficients")
    p = add("cohomology", cmd_cohomology, "XH^1 or XH^2 with trivial, adjoint or dual coefficients")
    p.add_argument("--degree", type=int, default=2, choices=(1, 2))
    p.add_argument("--module", default="trivial", choices=("trivial", "adjoint", "dual", "pidual"))
    p.add_argument("--parity", default="all", choices=tuple(_PARITY))
    p = add("lagrangian-cohomology", cmd_lagrangian, "XH^2_L with values in the dual (even kind) or its parity shift (odd kind)")
    p.add_argument("--kind", default="even", choices=("even", "odd"))
    p.add_argument("--parity", default="all", choices=tuple(_PARITY))
    p = add("extend", cmd_extend, "build the T* (even) or Pi T* (odd) extension of a flat torsion-free base")
    p.add_argument("--base", metavar="NAME", help="catalog name of the base algebra")
    p.add_argument("--connection", help="connection file, catalog entry, or bindings for the catalog connection on the base")
    p.add_argument("--cocycle", help="cocycle file, or labelled cochains joined by '+', e.g. alpha2+gamma31")
    p.add_argument("--kind", default="even", choices=("even", "odd"))
    p = add("extract", cmd_extract, "recover (h, nabla, alpha, gamma) from an algebra with form and Lagrangian ideal")
    p.add_argument("--allow-torsion", action="store_true", help="report a torsioned induced connection instead of failing")
    add("classify", cmd_classify, "without input: classify 2-dim algebras; with input: find isomorphic catalog entries")
    p = add("search-lss", cmd_search_lss, "compatible left-symmetric products, one per automorphism orbit")
    p.add_argument("--raw", action="store_true", help="list every product, not orbit representatives")
    add("queerify", cmd_queerify, "double a purely even left-alternative product")
    p = add("reproduce", cmd_reproduce, "recompute a stored table and diff against it ('list' shows the tables)", source=False)
    p.add_argument("table")
    p = add("emit", cmd_emit, "print a catalog entry in the file format ('list' shows the names)", source=False)
    p.add_argument("name", nargs="?")
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Out(args.machine, args.command)
    try:
        args.fn(args, out)
    except (UsageError, ParseError, UnknownEntry, ConstraintViolation) as exc:
        print(f"superlie2 {args.command}: {exc}", file=sys.stderr)
        return 2
    except (VerificationFailure, Superlie2Error, AssertionError) as exc:
        print(f"superlie2 {args.command}: {exc}", file=sys.stderr)
        return 1
    return 1 if out.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
