"""Structure-constant Lie algebras, subspaces and the basic constructions on them."""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from ..errors import (
    JacobiViolation, NotADerivation, NotASubalgebra, NonSymmetric,
    NonPositiveDefinite,
)
from ..exactlin.matrix import (
    zeros, identity, is_zero, kernel_basis, span_basis, in_span, rank,
    coords_in_basis, commutator, demote_matrix, matrix_field, rref, inverse,
    flatten, intersect_spans, sum_spans, purely_imaginary_spectrum, mat,
)
from ..exactlin.numberfield import demote, sign


@dataclass(eq=False)
class LieAlgebra:
    """``[X_i, X_j] = sum_k c[i, j, k] X_k`` over an exact real field."""

    c: np.ndarray
    labels: tuple = ()
    name: str = ""
    check: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = self.c.shape[0]
        if self.c.shape != (n, n, n):
            raise ValueError("structure tensor must be n x n x n")
        self.c = demote_matrix(self.c)
        if not self.labels:
            self.labels = tuple(f"e{i + 1}" for i in range(n))
        self.labels = tuple(self.labels)
        if len(self.labels) != n:
            raise ValueError("one label per basis element required")
        if self.check:
            self._verify()

    @classmethod
    def from_brackets(cls, n, brackets, labels=(), name="", check=True):
        """Build from ``{(i, j): {k: coeff}}`` with 0-based indices and i < j."""
        c = np.full((n, n, n), Fraction(0), dtype=object)
        for (i, j), out in brackets.items():
            for k, v in out.items():
                v = v if not isinstance(v, (int, str)) else Fraction(v)
                c[i, j, k] = c[i, j, k] + v
                c[j, i, k] = c[j, i, k] - v
        return cls(c, tuple(labels), name, check)

    @property
    def dim(self):
        return self.c.shape[0]

    @property
    def field(self):
        f = self._cache.get("field", False)
        if f is False:
            f = matrix_field(self.c)
            self._cache["field"] = f
        return f

    def _verify(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.c[i, j, k] != -self.c[j, i, k]:
                        raise ValueError(f"structure constants not antisymmetric at {(i, j, k)}")
        ads = self.ad_basis()
        for i, j, k in combinations(range(n), 3):
            res = (ads[k].dot(self.c[i, j]) * -1
                   + -ads[i].dot(self.c[j, k])
                   + -ads[j].dot(self.c[k, i]))
            # [[Xi,Xj],Xk] = -ad(Xk)[Xi,Xj]
            if not is_zero(res):
                raise JacobiViolation((i, j, k), [demote(x) for x in res])

    def ad_basis(self):
        ads = self._cache.get("ad_basis")
        if ads is None:
            ads = [np.ascontiguousarray(self.c[i].T) for i in range(self.dim)]
            self._cache["ad_basis"] = ads
        return ads

    def basis_vector(self, i):
        v = zeros(self.dim)
        v[i] = Fraction(1)
        return v

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim})"


def ad(g, x):
    """Matrix of ``ad_x``; column j is ``[x, X_j]``."""
    out = zeros(g.dim, g.dim)
    for i, xi in enumerate(x):
        if xi != 0:
            out = out + xi * g.ad_basis()[i]
    return out


def bracket(g, x, y):
    x, y = np.asarray(x, dtype=object), np.asarray(y, dtype=object)
    if x.shape != (g.dim,) or y.shape != (g.dim,):
        raise ValueError("dimension mismatch")
    return demote_matrix(ad(g, x).dot(y))


@dataclass(eq=False)
class Subspace:
    """A subspace of ``ambient`` with a canonical reduced-echelon basis."""

    ambient: LieAlgebra
    basis: list
    is_subalgebra: bool = False
    is_ideal: bool = False

    @classmethod
    def span(cls, g, vectors):
        basis = span_basis([v for v in vectors if not is_zero(v)])
        sub = cls(g, basis)
        sub.is_subalgebra = all(in_span(basis, bracket(g, a, b))
                                for a, b in combinations(basis, 2))
        sub.is_ideal = all(in_span(basis, bracket(g, g.basis_vector(i), b))
                           for i in range(g.dim) for b in basis)
        return sub

    @classmethod
    def whole(cls, g):
        return cls.span(g, [g.basis_vector(i) for i in range(g.dim)])

    @classmethod
    def zero(cls, g):
        return cls.span(g, [])

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return in_span(self.basis, v)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace) or self.dim != other.dim:
            return False
        return all(is_zero(a - b) for a, b in zip(self.basis, other.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient!r})"

    def matrix(self):
        """Basis vectors as columns."""
        if not self.basis:
            return zeros(self.ambient.dim, 0)
        return np.array([list(b) for b in self.basis], dtype=object).T


def subalgebra(g, sub):
    """Structure constants of a subalgebra in its own basis."""
    if not sub.is_subalgebra:
        raise NotASubalgebra("subspace is not closed under the bracket")
    m = sub.dim
    c = np.full((m, m, m), Fraction(0), dtype=object)
    for i in range(m):
        for j in range(i + 1, m):
            coords = coords_in_basis(sub.basis, bracket(g, sub.basis[i], sub.basis[j]))
            for k in range(m):
                c[i, j, k] = coords[k]
                c[j, i, k] = -coords[k]
    return LieAlgebra(c, tuple(f"b{i + 1}" for i in range(m)), f"{g.name}|sub", check=False)


def bracket_span(g, a, b):
    return span_basis([bracket(g, x, y) for x in a for y in b])


def derived_series(g):
    """Subspaces g ⊇ [g,g] ⊇ ... ending at 0 or at a stationary term."""
    cur = Subspace.whole(g)
    out = [cur]
    while cur.dim:
        nxt = Subspace.span(g, bracket_span(g, cur.basis, cur.basis))
        if nxt.dim == cur.dim:
            break
        out.append(nxt)
        cur = nxt
    return out


def is_solvable(g):
    return derived_series(g)[-1].dim == 0


def lower_central_series(g):
    whole = Subspace.whole(g)
    cur, out = whole, [whole]
    while cur.dim:
        nxt = Subspace.span(g, bracket_span(g, whole.basis, cur.basis))
        if nxt.dim == cur.dim:
            break
        out.append(nxt)
        cur = nxt
    return out


def is_nilpotent(g):
    return lower_central_series(g)[-1].dim == 0


def center(g):
    if g.dim == 0:
        return Subspace.zero(g)
    # x central iff [X_i, x] = ad(X_i) x = 0 for all i
    rows = np.concatenate(g.ad_basis(), axis=0)
    return Subspace.span(g, kernel_basis(rows))


def is_unimodular(g):
    return all(sum(a[i, i] for i in range(g.dim)) == 0 for a in g.ad_basis())


def killing_form(g):
    ads = g.ad_basis()
    n = g.dim
    b = zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            t = sum((ads[i][p, :].dot(ads[j][:, p]) for p in range(n)), Fraction(0))
            b[i, j] = b[j, i] = demote(t)
    return b


def normalizer(g, sub):
    """{x : [x, h] ⊆ h for every basis vector h of ``sub``}."""
    n = g.dim
    if sub.dim == 0:
        return Subspace.whole(g)
    ann = kernel_basis(sub.matrix().T)  # vectors orthogonal (dot) to sub
    if not ann:
        return Subspace.whole(g)
    annm = np.array([list(a) for a in ann], dtype=object)
    rows = [annm.dot(ad(g, h)) for h in sub.basis]
    # [x, h] = -ad(h) x must lie in sub: ann . ad(h) x = 0
    return Subspace.span(g, kernel_basis(np.concatenate(rows, axis=0)))


# --- derivations and extensions ---------------------------------------------

def _derivation_rows(g):
    n = g.dim
    c = g.c
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for l in range(n):
                    if c[i, j, l] != 0:
                        row[k * n + l] += c[i, j, l]
                for a in range(n):
                    if c[a, j, k] != 0:
                        row[a * n + i] -= c[a, j, k]
                    if c[i, a, k] != 0:
                        row[a * n + j] -= c[i, a, k]
                if any(x != 0 for x in row):
                    rows.append(row)
    return rows


def _as_matrices(vectors, n):
    return [demote_matrix(np.asarray(v, dtype=object).reshape(n, n)) for v in vectors]


def derivations(g):
    """Basis of Der(g) as n x n matrices (``D e_b = sum_a D[a, b] e_a``)."""
    n = g.dim
    rows = _derivation_rows(g)
    if not rows:
        return _as_matrices([flatten(m) for m in _unit_matrices(n)], n)
    return _as_matrices(kernel_basis(np.array(rows, dtype=object)), n)


def _unit_matrices(n):
    out = []
    for a in range(n):
        for b in range(n):
            m = zeros(n, n)
            m[a, b] = Fraction(1)
            out.append(m)
    return out


def is_derivation(g, d):
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            x, y = g.basis_vector(i), g.basis_vector(j)
            lhs = d.dot(bracket(g, x, y))
            rhs = bracket(g, d.dot(x), y) + bracket(g, x, d.dot(y))
            if not is_zero(lhs - rhs):
                return False
    return True


@dataclass(frozen=True)
class InnerProduct:
    """Positive-definite symmetric form on the coordinate space."""

    matrix: np.ndarray

    def __post_init__(self):
        m = demote_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = m.shape[0]
        if m.shape != (n, n) or not is_zero(m - m.T):
            raise NonSymmetric("inner product matrix is not symmetric")
        for k in range(1, n + 1):
            if sign(_det(m[:k, :k])) <= 0:
                raise NonPositiveDefinite(f"leading principal minor {k} is not positive")

    @classmethod
    def standard(cls, n):
        return cls(identity(n))


def _det(a):
    a = np.array(a, dtype=object, copy=True)
    n = a.shape[0]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i, col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det = det * a[col, col]
        for i in range(col + 1, n):
            if a[i, col] != 0:
                a[i] = a[i] - (a[i, col] / a[col, col]) * a[col]
    return demote(det)


def orthogonal_derivations(g, ip):
    """Basis of skew-symmetric (for ``ip``) derivations of ``g``."""
    n = g.dim
    q = ip.matrix
    rows = _derivation_rows(g)
    for p in range(n):
        for r in range(p, n):
            row = [Fraction(0)] * (n * n)
            for a in range(n):
                # (q D)_{pr} + (D^T q)_{pr} = sum_a q_pa D_ar + D_ap q_ar
                row[a * n + r] += q[p, a]
                row[a * n + p] += q[a, r]
            rows.append(row)
    out = _as_matrices(kernel_basis(np.array(rows, dtype=object)), n)
    for d in out:
        if not purely_imaginary_spectrum(d):
            raise AssertionError("skew derivation with non-imaginary spectrum")
    return out


def matrix_span_coords(basis, m):
    """Coordinates of matrix ``m`` in a list of basis matrices, or None."""
    return coords_in_basis([flatten(b) for b in basis], flatten(m))


@dataclass
class SemidirectSum:
    algebra: LieAlgebra
    r_indices: list
    k_indices: list
    derivations: list


def semidirect_sum(r, ks, k_labels=None):
    """``r ⋊ span(ks)``: basis of r first, then one element per derivation."""
    ks = [demote_matrix(d) for d in ks]
    for d in ks:
        if not is_derivation(r, d):
            raise NotADerivation("matrix is not a derivation of r")
    if ks and rank(np.array([flatten(d) for d in ks], dtype=object)) != len(ks):
        raise ValueError("derivations must be linearly independent")
    n, m = r.dim, len(ks)
    coords = {}
    for a in range(m):
        for b in range(a + 1, m):
            cm = matrix_span_coords(ks, commutator(ks[a], ks[b]))
            if cm is None:
                raise NotASubalgebra("derivations not closed under commutator")
            coords[a, b] = cm
    N = n + m
    c = np.full((N, N, N), Fraction(0), dtype=object)
    c[:n, :n, :n] = r.c
    for a, d in enumerate(ks):
        for j in range(n):
            for k in range(n):
                c[n + a, j, k] = d[k, j]
                c[j, n + a, k] = -d[k, j]
    for (a, b), cm in coords.items():
        for t in range(m):
            c[n + a, n + b, n + t] = cm[t]
            c[n + b, n + a, n + t] = -cm[t]
    labels = tuple(r.labels) + tuple(k_labels or (f"D{a + 1}" for a in range(m)))
    alg = LieAlgebra(c, labels, f"{r.name}⋊k" if m else r.name)
    return SemidirectSum(alg, list(range(n)), list(range(n, N)), ks)


def direct_sum(g1, g2, name=None):
    n1, n2 = g1.dim, g2.dim
    N = n1 + n2
    c = np.full((N, N, N), Fraction(0), dtype=object)
    c[:n1, :n1, :n1] = g1.c
    c[n1:, n1:, n1:] = g2.c
    labels = tuple(g1.labels) + tuple(g2.labels)
    if len(set(labels)) != len(labels):
        labels = tuple(f"{l}_1" for l in g1.labels) + tuple(f"{l}_2" for l in g2.labels)
    return LieAlgebra(c, labels, name or f"{g1.name}+{g2.name}")


def change_basis(g, p, name=None):
    """Same algebra in the basis given by the columns of invertible ``p``."""
    pinv = inverse(p)
    n = g.dim
    c = np.full((n, n, n), Fraction(0), dtype=object)
    cols = [p[:, i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = pinv.dot(bracket(g, cols[i], cols[j]))
            for k in range(n):
                c[i, j, k] = v[k]
                c[j, i, k] = -v[k]
    return LieAlgebra(c, tuple(f"f{i + 1}" for i in range(n)), name or f"{g.name}'")
