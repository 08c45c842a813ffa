"""JSON documents for algebras and modifications.

Every number is a string: rationals as ``"p/q"`` (or ``"p"``), elements of
an optional number field as lists of rational strings giving coordinates
in powers of the field generator.  Serialization is canonical: sorted
keys, reduced rationals, zero coefficients dropped, brackets sorted.
"""
import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DocumentSyntaxError
from .exactlin.matrix import zeros, matrix_field
from .exactlin.numberfield import NumberField, FieldElement, demote, embed
from .liealg.algebra import LieAlgebra, InnerProduct


@dataclass
class AlgebraDocument:
    name: str
    dimension: int
    basis: list
    brackets: list  # (i, j, {k: scalar}) with i < j
    inner_product: Optional[list] = None
    metadata: dict = field(default_factory=dict)
    field: Optional[NumberField] = None


# --- scalars ----------------------------------------------------------------

def _parse_rational(s, where):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise DocumentSyntaxError(f"{where}: numbers must be strings like \"p/q\"")
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError):
        raise DocumentSyntaxError(f"{where}: bad rational {s!r}") from None


def _parse_scalar(v, nf, where):
    if isinstance(v, list):
        if nf is None:
            raise DocumentSyntaxError(f"{where}: field coordinates given but no field declared")
        if len(v) > nf.degree:
            raise DocumentSyntaxError(f"{where}: too many field coordinates")
        return demote(nf.element([_parse_rational(x, where) for x in v]))
    return _parse_rational(v, where)


def scalar_to_json(z):
    z = demote(z)
    if isinstance(z, FieldElement):
        return [str(c) for c in z.c]
    return str(z)


# --- parsing ----------------------------------------------------------------

def _expect(cond, msg):
    if not cond:
        raise DocumentSyntaxError(msg)


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from None


def parse_document(text):
    """Text -> AlgebraDocument with all format rules enforced.

    Schema errors inside the bracket list are reported at the line of the
    offending entry; other schema errors point at the start of the text.
    """
    obj = load_json(text)
    try:
        return document_from_obj(obj)
    except DocumentSyntaxError as e:
        if e.line is not None:
            raise
        line, col = _locate(text, str(e))
        raise DocumentSyntaxError(str(e), line, col) from None


def _locate(text, message):
    m = re.match(r"brackets\[(\d+)\]", message)
    if m:
        hits = [h.start() for h in re.finditer(r'"i"\s*:', text)]
        idx = int(m.group(1))
        if idx < len(hits):
            pos = text.rfind("{", 0, hits[idx])
            pos = hits[idx] if pos < 0 else pos
            line = text.count("\n", 0, pos) + 1
            return line, pos - (text.rfind("\n", 0, pos) + 1) + 1
    return 1, 1


def _parse_field(obj):
    if obj is None:
        return None
    _expect(isinstance(obj, dict) and "minpoly" in obj, "field needs a minpoly")
    mp = [_parse_rational(c, "field.minpoly") for c in obj["minpoly"]]
    try:
        return NumberField(mp, int(obj.get("root_index", 0)))
    except ValueError as e:
        raise DocumentSyntaxError(f"field: {e}") from None


def document_from_obj(obj):
    _expect(isinstance(obj, dict), "document must be a JSON object")
    unknown = set(obj) - {"name", "dimension", "basis", "brackets", "inner_product",
                          "metadata", "field"}
    _expect(not unknown, f"unknown keys: {sorted(unknown)}")
    n = obj.get("dimension")
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 0,
            "dimension must be a non-negative integer")
    basis = obj.get("basis", [f"e{i + 1}" for i in range(n)])
    _expect(isinstance(basis, list) and len(basis) == n and all(isinstance(b, str) for b in basis),
            "basis must list one label per dimension")
    _expect(len(set(basis)) == n, "basis labels must be distinct")
    nf = _parse_field(obj.get("field"))
    brackets, seen = [], set()
    for idx, entry in enumerate(obj.get("brackets", [])):
        where = f"brackets[{idx}]"
        _expect(isinstance(entry, dict) and {"i", "j", "coeffs"} <= set(entry), f"{where}: needs i, j, coeffs")
        i, j = entry["i"], entry["j"]
        _expect(isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n,
                f"{where}: index out of range")
        _expect(i < j, f"{where}: only entries with i < j are allowed")
        _expect((i, j) not in seen, f"{where}: duplicate entry for ({i}, {j})")
        seen.add((i, j))
        coeffs = {}
        _expect(isinstance(entry["coeffs"], dict), f"{where}: coeffs must be an object")
        for k, v in entry["coeffs"].items():
            try:
                kk = int(k)
            except ValueError:
                raise DocumentSyntaxError(f"{where}: bad output index {k!r}") from None
            _expect(0 <= kk < n, f"{where}: output index out of range")
            c = _parse_scalar(v, nf, where)
            if c != 0:
                coeffs[kk] = c
        brackets.append((i, j, coeffs))
    ip = obj.get("inner_product")
    if ip is not None:
        _expect(isinstance(ip, list) and len(ip) == n and all(isinstance(r, list) and len(r) == n for r in ip),
                "inner_product must be an n x n matrix")
        ip = [[_parse_scalar(x, nf, "inner_product") for x in row] for row in ip]
    meta = obj.get("metadata", {})
    _expect(isinstance(meta, dict), "metadata must be an object")
    name = obj.get("name", "")
    _expect(isinstance(name, str), "name must be a string")
    return AlgebraDocument(name, n, list(basis), sorted(brackets, key=lambda b: b[:2]),
                           ip, meta, nf)


def to_algebra(doc):
    """LieAlgebra (Jacobi verified) and the InnerProduct, if any."""
    n = doc.dimension
    c = np.full((n, n, n), Fraction(0), dtype=object)
    for i, j, coeffs in doc.brackets:
        for k, v in coeffs.items():
            c[i, j, k] = v
            c[j, i, k] = -v
    g = LieAlgebra(c, tuple(doc.basis), doc.name)
    ip = None
    if doc.inner_product is not None:
        m = zeros(n, n)
        for a in range(n):
            for b in range(n):
                m[a, b] = doc.inner_product[a][b]
        ip = InnerProduct(m)
    return g, ip


def parse(text):
    return to_algebra(parse_document(text))


# --- serialization ----------------------------------------------------------

def document_from_algebra(g, ip=None, metadata=None, name=None):
    n = g.dim
    nf = g.field
    if ip is not None and nf is None:
        nf = matrix_field(ip.matrix)
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = {k: g.c[i, j, k] for k in range(n) if g.c[i, j, k] != 0}
            if coeffs:
                brackets.append((i, j, coeffs))
    ipm = None
    if ip is not None:
        ipm = [[ip.matrix[a, b] for b in range(n)] for a in range(n)]
    return AlgebraDocument(name if name is not None else g.name, n, list(g.labels),
                           brackets, ipm, dict(metadata or {}), nf)


def document_to_obj(doc):
    obj = {
        "name": doc.name,
        "dimension": doc.dimension,
        "basis": list(doc.basis),
        "brackets": [
            {"i": i, "j": j, "coeffs": {str(k): scalar_to_json(v) for k, v in sorted(c.items())}}
            for i, j, c in sorted(doc.brackets, key=lambda b: b[:2]) if c
        ],
    }
    if doc.field is not None:
        obj["field"] = {"minpoly": [str(c) for c in doc.field.minpoly],
                        "root_index": doc.field.root_index}
    if doc.inner_product is not None:
        obj["inner_product"] = [[scalar_to_json(x) for x in row] for row in doc.inner_product]
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return obj


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize(doc):
    return canonical_json(document_to_obj(doc))


def digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# --- modification documents -------------------------------------------------

@dataclass
class ModificationDocument:
    torus: list  # matrices as nested lists of scalars
    phi: list  # len(torus) rows, dim s columns
    inner_product: Optional[list] = None


def parse_modification(text, n):
    obj = load_json(text)
    _expect(isinstance(obj, dict), "modification document must be a JSON object")
    nf = _parse_field(obj.get("field"))
    torus = obj.get("torus", [])
    _expect(isinstance(torus, list), "torus must be a list of matrices")
    mats = []
    for a, t in enumerate(torus):
        _expect(isinstance(t, list) and len(t) == n and all(isinstance(r, list) and len(r) == n for r in t),
                f"torus[{a}] must be {n} x {n}")
        m = zeros(n, n)
        for i in range(n):
            for j in range(n):
                m[i, j] = _parse_scalar(t[i][j], nf, f"torus[{a}]")
        mats.append(m)
    phi = obj.get("phi", [])
    _expect(isinstance(phi, list) and len(phi) == len(mats)
            and all(isinstance(r, list) and len(r) == n for r in phi),
            "phi must have one row of length dim s per torus element")
    pm = zeros(len(mats), n)
    for a in range(len(mats)):
        for j in range(n):
            pm[a, j] = _parse_scalar(phi[a][j], nf, "phi")
    ip = obj.get("inner_product")
    if ip is not None:
        _expect(isinstance(ip, list) and len(ip) == n, "inner_product must be n x n")
        q = zeros(n, n)
        for i in range(n):
            for j in range(n):
                q[i, j] = _parse_scalar(ip[i][j], nf, "inner_product")
        ip = InnerProduct(q)
    return mats, pm, ip


def modification_to_obj(m):
    n = m.s.dim
    return {
        "torus": [[[scalar_to_json(d[i, j]) for j in range(n)] for i in range(n)] for d in m.t],
        "phi": [[scalar_to_json(m.phi[a, j]) for j in range(n)] for a in range(len(m.t))],
        "inner_product": [[scalar_to_json(m.ip.matrix[i, j]) for j in range(n)] for i in range(n)],
    }
