"""Exact dense matrices as numpy object arrays of scalars.

Entries are ``Fraction`` or ``FieldElement`` values from a single number
field.  Nothing here ever converts to floating point.
"""
from fractions import Fraction

import numpy as np

from .numberfield import (
    FieldElement, common_field, demote, embed, sign, is_rational, re, im,
)
from .poly import (
    trim, pmonic, psquarefree, degree, count_real_roots, pgcd, pdivmod,
)

__all__ = [
    "mat", "vec", "identity", "zeros", "is_zero", "rref", "kernel_basis",
    "rank", "span_basis", "solve", "inverse", "char_poly", "min_poly",
    "matrix_poly", "to_field", "demote_matrix", "matrix_field",
    "all_eigenvalues_real", "purely_imaginary_spectrum", "in_span",
    "commutator", "coords_in_basis", "intersect_spans", "sum_spans",
    "flatten", "is_squarefree",
]


def _scalar(x):
    if isinstance(x, FieldElement):
        return x
    return Fraction(x)


def mat(rows):
    rows = [[_scalar(x) for x in row] for row in rows]
    if not rows:
        return np.empty((0, 0), dtype=object)
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise ValueError("ragged matrix")
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def vec(values):
    out = np.empty(len(values), dtype=object)
    for i, x in enumerate(values):
        out[i] = _scalar(x)
    return out


def zeros(m, n=None):
    shape = (m,) if n is None else (m, n)
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def is_zero(a):
    return all(x == 0 for x in np.asarray(a).flat)


def commutator(a, b):
    return a.dot(b) - b.dot(a)


def flatten(a):
    return np.asarray(a).reshape(-1)


def matrix_field(a):
    return common_field(np.asarray(a).flat)


def to_field(a, field):
    a = np.asarray(a)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = embed(x, field)
    return out


def demote_matrix(a):
    """Replace rational field elements by Fractions entrywise."""
    a = np.asarray(a)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = demote(x)
    return out


# --- elimination ------------------------------------------------------------

def rref(a):
    """Reduced row echelon form and pivot columns (first-nonzero pivoting)."""
    r = np.array(a, dtype=object, copy=True)
    if r.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        piv = next((i for i in range(row, m) if r[i, col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        p = r[row, col]
        if p != 1:
            r[row] = [x / p for x in r[row]]
        for i in range(m):
            if i != row and r[i, col] != 0:
                f = r[i, col]
                r[i] = r[i] - f * r[row]
        pivots.append(col)
        row += 1
    return r, pivots


def kernel_basis(a):
    """Basis of the right null space, one vector per free column."""
    a = np.asarray(a, dtype=object)
    m, n = a.shape
    if m == 0:
        return [_unit(n, j) for j in range(n)]
    r, pivots = rref(a)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = zeros(n)
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(demote_matrix(v))
    return basis


def _unit(n, j):
    v = zeros(n)
    v[j] = Fraction(1)
    return v


def rank(a):
    a = np.asarray(a, dtype=object)
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def span_basis(vectors, n=None):
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    vectors = [np.asarray(v, dtype=object) for v in vectors]
    if not vectors:
        return []
    r, pivots = rref(np.array(vectors, dtype=object))
    return [demote_matrix(r[i]) for i in range(len(pivots))]


def sum_spans(a, b):
    return span_basis(list(a) + list(b))


def intersect_spans(a, b, n):
    """Basis of span(a) ∩ span(b) inside an n-dimensional space."""
    if not a or not b:
        return []
    # solve sum x_i a_i - sum y_j b_j = 0
    m = np.array([list(v) for v in a] + [list(-np.asarray(w)) for w in b], dtype=object).T
    out = []
    for k in kernel_basis(m):
        v = zeros(n)
        for x, ai in zip(k[:len(a)], a):
            v = v + x * np.asarray(ai)
        out.append(v)
    return span_basis(out)


def in_span(basis, v):
    if is_zero(v):
        return True
    if not basis:
        return False
    return rank(np.array(list(basis) + [v], dtype=object)) == rank(np.array(list(basis), dtype=object))


def coords_in_basis(basis, v):
    """Coordinates of ``v`` in ``basis`` (list of vectors), or None."""
    if not basis:
        return [] if is_zero(v) else None
    m = np.array([list(b) for b in basis], dtype=object).T
    return solve(m, v)


def solve(a, b):
    """One solution x of a x = b, or None when inconsistent."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    m, n = a.shape
    aug = np.concatenate([a, b.reshape(m, 1)], axis=1)
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = zeros(n)
    for i, p in enumerate(pivots):
        x[p] = r[i, n]
    return demote_matrix(x)


def inverse(a):
    n = a.shape[0]
    r, pivots = rref(np.concatenate([a, identity(n)], axis=1))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return r[:, n:]


# --- polynomials of matrices -------------------------------------------------

def char_poly(a):
    """Characteristic polynomial det(xI - a) by Faddeev-LeVerrier (char 0)."""
    n = a.shape[0]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n, n)
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[n - k + 1] * identity(n)
        coeffs[n - k] = -_trace(a.dot(mk)) / k
    return trim([demote(c) for c in coeffs])


def _trace(a):
    t = Fraction(0)
    for i in range(a.shape[0]):
        t = t + a[i, i]
    return t


def matrix_poly(p, a):
    n = a.shape[0]
    out = zeros(n, n)
    for c in reversed(p):
        out = out.dot(a) + c * identity(n)
    return out


def min_poly(a):
    """Monic minimal polynomial via the first linear dependency among powers."""
    n = a.shape[0]
    if n == 0:
        return (Fraction(1),)
    powers = [flatten(identity(n))]
    cur = identity(n)
    for k in range(1, n + 1):
        cur = cur.dot(a)
        target = flatten(cur)
        m = np.array(powers, dtype=object).T
        sol = solve(m, target)
        if sol is not None:
            p = [-c for c in sol] + [Fraction(1)]
            return trim([demote(c) for c in p])
        powers.append(target)
    raise AssertionError("Cayley-Hamilton violated")


def is_squarefree(p):
    return degree(psquarefree(p)) == degree(p)


def _real_sign(z):
    return sign(z)


def all_eigenvalues_real(a):
    """True iff every eigenvalue of the real matrix ``a`` is real (Sturm)."""
    p = psquarefree(min_poly(a))
    if degree(p) <= 0:
        return True
    return count_real_roots(p, sign_fn=_real_sign) == degree(p)


def purely_imaginary_spectrum(a):
    """True iff every eigenvalue of the real matrix ``a`` has zero real part.

    With ``p`` the squarefree minimal polynomial, eigenvalues ``i t`` (t
    real) correspond to real roots of ``q(x) = p(i x) = A(x) + i B(x)``,
    i.e. real common roots of ``A`` and ``B``.
    """
    p = psquarefree(min_poly(a))
    d = degree(p)
    if d <= 0:
        return True
    A, B = [], []
    for k, c in enumerate(p):
        r = k % 4
        A.append(c if r == 0 else (-c if r == 2 else Fraction(0)))
        B.append(c if r == 1 else (-c if r == 3 else Fraction(0)))
    g = pgcd(trim(A), trim(B))
    if degree(g) != d:
        return False
    return count_real_roots(g, sign_fn=_real_sign) == d
