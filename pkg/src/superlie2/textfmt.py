"""Line-based text format for algebras and the data attached to them.

A document is a sequence of directives, one per line, ``#`` starts a
comment::

    field 2^1 0x3
    sdim 1 1
    basis e1 | e2
    bracket e1 e2 = e2
    squaring e2 = 0
    prod e1 e2 = e2
    nabla e1 e2 = e2
    form even
    w e1 e2 = 1
    cocycle even
    alpha e1 e2 = e2*
    gamma e2 = e1*

Right-hand sides are sums of ``c*name`` terms.  A coefficient is a field
expression: hex literals (``3``, ``0xa``), declared parameters, ``+``,
``*``, ``(...)`` and ``^-1`` for inverses.  Catalog files add ``entry``,
``param``, ``forall``, ``claim``, ``expect`` and a few other keys; they
are parsed here and interpreted by :mod:`superlie2.catalog`.
"""
from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError, VerificationFailure
from .field import GF2k, gf

VECTOR_KEYS = {"bracket": 2, "squaring": 1, "prod": 2, "nabla": 2, "alpha": 2, "gamma": 1}
# directives accepted in standalone algebra files (catalog files add metadata keys)
FILE_KEYS = {"field", "sdim", "basis", "param", "form", "w", "cocycle", "ideal", "complement", *VECTOR_KEYS}


@dataclass
class Line:
    no: int
    text: str
    key: str
    args: list[str]
    rhs: str | None = None
    rhs_col: int = 0


@dataclass
class Document:
    """Raw directives of one algebra (or catalog entry), not yet evaluated."""

    name: str = ""
    field_spec: tuple[int, int] | None = None
    sdim: tuple[int, int] | None = None
    basis: list[str] = field(default_factory=list)
    lines: list[Line] = field(default_factory=list)
    start: int = 1

    def of(self, key: str) -> list[Line]:
        return [ln for ln in self.lines if ln.key == key]

    def first(self, key: str) -> Line | None:
        found = self.of(key)
        return found[0] if found else None

    def meta(self, key: str, default: str | None = None) -> str | None:
        ln = self.first(key)
        return " ".join(ln.args) if ln else default


def _strip(text: str) -> str:
    return text.split("#", 1)[0].rstrip()


def parse_lines(text: str, first_line: int = 1) -> list[Line]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=first_line):
        body = _strip(raw)
        if not body.strip():
            continue
        lhs, rhs, col = body, None, 0
        m = re.search(r"(?<![!<>=])=(?!=)", body)
        if m:
            idx = m.start()
            lhs, rhs, col = body[:idx], body[idx + 1 :].strip(), idx + 2
        parts = lhs.split()
        out.append(Line(no, raw, parts[0], parts[1:], rhs, col))
    return out


def split_documents(text: str) -> list[Document]:
    """Split on ``entry`` lines; text without any is a single document.

    Lines after ``group NAME`` (up to the first entry) are defaults copied
    into every following entry until the next group.
    """
    docs: list[Document] = []
    cur: Document | None = Document()
    defaults: list[Line] = []
    in_group = False
    for ln in parse_lines(text):
        if ln.key == "group":
            if cur is not None and (cur.lines or cur.name):
                docs.append(cur)
            cur, defaults, in_group = None, [ln], True
            continue
        if ln.key == "entry":
            if cur is not None and (cur.lines or cur.name):
                docs.append(cur)
            cur = Document(name=" ".join(ln.args), start=ln.no)
            for d in defaults:
                _absorb(cur, d)
            in_group = False
            continue
        if in_group:
            defaults.append(ln)
            continue
        if cur is None:
            raise ParseError("directive outside any entry", ln.no)
        _absorb(cur, ln)
    if cur is not None and (cur.lines or cur.name):
        docs.append(cur)
    return docs


def parse_document(text: str) -> Document:
    docs = split_documents(text)
    if len(docs) != 1:
        raise ParseError(f"expected one document, found {len(docs)}")
    return docs[0]


def _absorb(doc: Document, ln: Line) -> None:
    if ln.key == "field":
        if not ln.args or not ln.args[0].startswith("2^"):
            raise ParseError("field line must read 'field 2^k 0x<modulus>'", ln.no)
        try:
            k = int(ln.args[0][2:])
            mod = int(ln.args[1], 16) if len(ln.args) > 1 else None
            F = gf(k, mod)
        except Exception as exc:  # bad degree or reducible modulus
            raise ParseError(str(exc), ln.no) from None
        doc.field_spec = (F.k, F.modulus)
    elif ln.key == "sdim":
        try:
            m, n = (int(a) for a in ln.args)
        except ValueError:
            raise ParseError("sdim needs two integers", ln.no) from None
        doc.sdim = (m, n)
    elif ln.key == "basis":
        words = ln.args
        if words.count("|") != 1:
            raise ParseError("basis needs exactly one '|' between even and odd names", ln.no)
        bar = words.index("|")
        names = words[:bar] + words[bar + 1 :]
        if len(set(names)) != len(names):
            raise ParseError("repeated basis name", ln.no)
        doc.basis = names
        doc.sdim = doc.sdim or (bar, len(names) - bar)
        if doc.sdim != (bar, len(names) - bar):
            raise ParseError("basis does not match sdim", ln.no)
    doc.lines.append(ln)


# -- scalar and vector expressions ----------------------------------------------
_NUM = re.compile(r"(?<![A-Za-z_])(0x[0-9a-fA-F]+|[0-9][0-9a-fA-F]*)(?![A-Za-z_0-9])")


def eval_scalar(F: GF2k, text: str, params: dict[str, int], line: int | None = None, col: int | None = None) -> int:
    src = text.strip().replace("^-1", "**-1")
    src = _NUM.sub(lambda m: str(int(m.group(1), 16)), src)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError:
        raise ParseError(f"cannot read coefficient {text!r}", line, col) from None

    def ev(node) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            if not 0 <= node.value < F.q:
                raise ParseError(f"element {node.value:#x} not in GF(2^{F.k})", line, col)
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise ParseError(f"unknown symbol {node.id!r}", line, col)
            return params[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            return ev(node.operand)
        if isinstance(node, ast.BinOp):
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                e = node.right
                neg = isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub)
                base = e.operand if neg else e
                if not (isinstance(base, ast.Constant) and isinstance(base.value, int)):
                    raise ParseError("exponent must be an integer", line, col)
                try:
                    return F.pow(a, -base.value if neg else base.value)
                except Exception as exc:
                    raise ParseError(str(exc), line, col) from None
            b = ev(node.right)
            if isinstance(node.op, (ast.Add, ast.Sub)):
                return a ^ b
            if isinstance(node.op, ast.Mult):
                return F.mul(a, b)
            if isinstance(node.op, ast.Div):
                if b == 0:
                    raise ParseError("division by zero", line, col)
                return F.div(a, b)
        raise ParseError(f"unsupported expression {text!r}", line, col)

    return int(ev(tree))


def _split_top(text: str, sep: str) -> list[tuple[str, int]]:
    """Split on sep outside parentheses; returns (piece, offset)."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


def eval_vector(
    F: GF2k, text: str, names: list[str], params: dict[str, int], line: int | None = None, col: int = 0
) -> np.ndarray:
    vec = np.zeros(len(names), dtype=np.int64)
    by_len = sorted(names, key=len, reverse=True)
    for piece, off in _split_top(text.replace(" ", ""), "+"):
        if not piece:
            raise ParseError("empty term", line, col + off)
        hit = None
        for n in by_len:
            if piece.endswith(n) and (len(piece) == len(n) or piece[-len(n) - 1] == "*"):
                hit = n
                break
        if hit is None:
            if eval_scalar(F, piece, params, line, col + off) == 0:
                continue
            raise ParseError(f"undeclared basis symbol in {piece!r}", line, col + off)
        coef = piece[: -len(hit) - 1] if len(piece) > len(hit) else "1"
        c = eval_scalar(F, coef, params, line, col + off)
        vec[names.index(hit)] ^= c
    return vec


def names_in(text: str, names: list[str]) -> list[str]:
    return [n for n in names if n in text]


# -- evaluated algebra documents --------------------------------------------------
@dataclass
class AlgebraFile:
    """An algebra with the optional blocks that followed it."""

    algebra: object
    product: object | None = None
    connection: object | None = None
    forms: list = field(default_factory=list)
    cocycles: list = field(default_factory=list)  # (kind, alpha dict, gamma dict) in 0-based indices
    ideal: np.ndarray | None = None
    complement: np.ndarray | None = None
    params: dict = field(default_factory=dict)


def doc_field(doc: Document, default: GF2k | None = None) -> GF2k:
    if doc.field_spec is not None:
        return gf(*doc.field_spec)
    if default is None:
        raise ParseError("missing 'field 2^k 0x..' line", doc.start)
    return default


def build_algebra(doc: Document, F: GF2k, params: dict[str, int], name: str = ""):
    from .superalg import LieSuperalgebra

    if doc.sdim is None or not doc.basis:
        raise ParseError("missing sdim or basis line", doc.start)
    m, n = doc.sdim
    names = doc.basis
    N = m + n
    c = np.zeros((N, N, N), dtype=np.int64)
    sq = np.zeros((N, N), dtype=np.int64)
    for ln in doc.of("bracket"):
        i, j = _indices(ln, names, 2)
        v = eval_vector(F, ln.rhs or "", names, params, ln.no, ln.rhs_col)
        if i == j:
            raise ParseError("bracket of a basis vector with itself; use squaring", ln.no)
        c[i, j] = c[j, i] = v
    for ln in doc.of("squaring"):
        (i,) = _indices(ln, names, 1)
        if i < m:
            raise ParseError(f"squaring of even vector {names[i]}", ln.no)
        sq[i] = eval_vector(F, ln.rhs or "", names, params, ln.no, ln.rhs_col)
    try:
        return LieSuperalgebra(F, m, n, c, sq, names, name or doc.name)
    except Exception as exc:
        raise ParseError(f"structure rejected: {exc}", doc.start) from None


def _indices(ln: Line, names: list[str], k: int) -> list[int]:
    if len(ln.args) != k or ln.rhs is None:
        raise ParseError(f"'{ln.key}' expects {k} basis symbol(s) and '= value'", ln.no)
    out = []
    for a in ln.args:
        if a not in names:
            col = ln.text.find(a) + 1
            raise ParseError(f"undeclared basis symbol {a!r}", ln.no, col)
        out.append(names.index(a))
    return out


def table_block(doc: Document, key: str, F: GF2k, names: list[str], params: dict[str, int]) -> np.ndarray | None:
    """(N,N,N) table for prod/nabla lines: t[i,j] = value of (e_i, e_j)."""
    lines = doc.of(key)
    if not lines:
        return None
    N = len(names)
    t = np.zeros((N, N, N), dtype=np.int64)
    for ln in lines:
        i, j = _indices(ln, names, 2)
        t[i, j] = eval_vector(F, ln.rhs or "", names, params, ln.no, ln.rhs_col)
    return t


def form_blocks(doc: Document, F: GF2k, names: list[str], params: dict[str, int]) -> list[tuple[str, np.ndarray]]:
    out = []
    cur = None
    for ln in doc.lines:
        if ln.key == "form":
            if not ln.args or ln.args[0] not in ("even", "odd"):
                raise ParseError("form header must be 'form even' or 'form odd'", ln.no)
            cur = (ln.args[0], np.zeros((len(names), len(names)), dtype=np.int64))
            out.append(cur)
        elif ln.key == "w":
            if cur is None:
                raise ParseError("'w' line outside a form block", ln.no)
            i, j = _indices(ln, names, 2)
            v = eval_scalar(F, ln.rhs or "", params, ln.no, ln.rhs_col)
            cur[1][i, j] = cur[1][j, i] = v
    return out


def dual_names(names: list[str], kind: str) -> list[str]:
    return [f"{n}*" if kind == "even" else f"P{n}*" for n in names]


def cocycle_blocks(doc: Document, F: GF2k, names: list[str], params: dict[str, int], named: bool = False):
    """Unlabelled cocycle blocks as (kind, alpha, gamma), or with named=True the
    labelled ones (header ``cocycle even LABEL``) as {label: (kind, alpha, gamma)}."""
    out, labelled = [], {}
    cur = None
    for ln in doc.lines:
        if ln.key == "cocycle":
            kind = ln.args[0] if ln.args else "even"
            if kind not in ("even", "odd") or len(ln.args) > 2:
                raise ParseError("cocycle header must be 'cocycle even|odd [label]'", ln.no)
            cur = (kind, {}, {})
            if len(ln.args) == 2:
                labelled[ln.args[1]] = cur
            else:
                out.append(cur)
        elif ln.key in ("alpha", "gamma"):
            if cur is None:
                raise ParseError(f"'{ln.key}' line outside a cocycle block", ln.no)
            mnames = dual_names(names, cur[0])
            if ln.key == "alpha":
                i, j = _indices(ln, names, 2)
                cur[1][(i, j)] = eval_vector(F, ln.rhs or "", mnames, params, ln.no, ln.rhs_col)
            else:
                (i,) = _indices(ln, names, 1)
                cur[2][i] = eval_vector(F, ln.rhs or "", mnames, params, ln.no, ln.rhs_col)
    return labelled if named else out


def subspace_rows(doc: Document, key: str, F: GF2k, names: list[str], params: dict[str, int]) -> np.ndarray | None:
    ln = doc.first(key)
    if ln is None:
        return None
    body = " ".join(ln.args)
    rows = [eval_vector(F, p.strip(), names, params, ln.no) for p in body.split(";") if p.strip()]
    return np.array(rows, dtype=np.int64).reshape(-1, len(names))


def read_algebra_file(text: str, F: GF2k | None = None, params: dict[str, int] | None = None, verify: bool = True) -> AlgebraFile:
    """Parse and verify an algebra file with its optional blocks."""
    from .connections import Connection
    from .forms import BilinearForm
    from .leftsym import Product
    from .superalg import verify_lie

    doc = parse_document(text)
    for ln in doc.lines:
        if ln.key not in FILE_KEYS:
            raise ParseError(f"unknown directive {ln.key!r}", ln.no)
    F = doc_field(doc, F)
    params = dict(params or {})
    g = build_algebra(doc, F, params)
    if verify:
        rep = verify_lie(g)
        if not rep.ok:
            raise VerificationFailure(f"not a Lie superalgebra: {rep.summary()}", rep)
    out = AlgebraFile(g, params=params)
    names = doc.basis
    t = table_block(doc, "prod", F, names, params)
    if t is not None:
        out.product = Product.like(g, t)
    t = table_block(doc, "nabla", F, names, params)
    if t is not None:
        out.connection = Connection(g, np.transpose(t, (0, 2, 1)))
    out.forms = [BilinearForm.on(g, G) for _, G in form_blocks(doc, F, names, params)]
    out.cocycles = cocycle_blocks(doc, F, names, params)
    out.ideal = subspace_rows(doc, "ideal", F, names, params)
    out.complement = subspace_rows(doc, "complement", F, names, params)
    return out


# -- emitting ------------------------------------------------------------------------
def fmt_coef(F: GF2k, c: int) -> str:
    return str(c) if c < 10 else f"{c:#x}"


def fmt_vector(F: GF2k, v, names: list[str]) -> str:
    terms = []
    for k in np.flatnonzero(v):
        c = int(v[k])
        terms.append(names[k] if c == 1 else f"{fmt_coef(F, c)}*{names[k]}")
    return " + ".join(terms) if terms else "0"


def emit_algebra(g) -> str:
    F = g.field
    names = list(g.names)
    lines = [F.header(), f"sdim {g.m} {g.n}", "basis " + " ".join(names[: g.m] + ["|"] + names[g.m :])]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if g.c[i, j].any():
                lines.append(f"bracket {names[i]} {names[j]} = {fmt_vector(F, g.c[i, j], names)}")
    for i in g.odd_indices():
        if g.sq[i].any():
            lines.append(f"squaring {names[i]} = {fmt_vector(F, g.sq[i], names)}")
    return "\n".join(lines) + "\n"


def emit_table(key: str, F: GF2k, t: np.ndarray, names: list[str]) -> str:
    out = []
    N = len(names)
    for i in range(N):
        for j in range(N):
            if t[i, j].any():
                out.append(f"{key} {names[i]} {names[j]} = {fmt_vector(F, t[i, j], names)}")
    return "\n".join(out) + ("\n" if out else "")


def emit_product(p) -> str:
    return emit_table("prod", p.field, p.a, list(p.names))


def emit_connection(nabla) -> str:
    g = nabla.g
    return emit_table("nabla", g.field, np.transpose(nabla.nabla, (0, 2, 1)), list(g.names))


def emit_form(w, names: list[str], F: GF2k) -> str:
    kind = "even" if w.parity == 0 else "odd"
    out = [f"form {kind}"]
    N = len(names)
    for i in range(N):
        for j in range(i, N):
            if w.gram[i, j]:
                out.append(f"w {names[i]} {names[j]} = {fmt_coef(F, int(w.gram[i, j]))}")
    return "\n".join(out) + "\n"


def emit_cocycle(c, kind: str) -> str:
    F = c.g.field
    names = list(c.g.names)
    mnames = list(c.r.names)
    out = [f"cocycle {kind}"]
    for i in range(c.g.dim):
        for j in range(i + 1, c.g.dim):
            if c.alpha[i, j].any():
                out.append(f"alpha {names[i]} {names[j]} = {fmt_vector(F, c.alpha[i, j], mnames)}")
    for i in c.g.odd_indices():
        if c.gamma[i].any():
            out.append(f"gamma {names[i]} = {fmt_vector(F, c.gamma[i], mnames)}")
    return "\n".join(out) + "\n"


def emit_subspace(key: str, F: GF2k, rows, names: list[str]) -> str:
    return f"{key} " + "; ".join(fmt_vector(F, r, names).replace(" ", "") for r in rows) + "\n"
