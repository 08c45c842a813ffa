"""Simultaneous triangularisation of ad g and what it reveals: weights,
nilradical, complete solvability."""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import InvariantViolation, NonSolvableInput
from ..exactlin.matrix import (
    zeros, identity, is_zero, kernel_basis, span_basis, rref, inverse,
    commutator, flatten, char_poly, to_field, demote_matrix, coords_in_basis,
)
from ..exactlin.numberfield import (
    splitting_field, roots_in_field, re, im, conj, demote, scalar_key,
)
from .algebra import Subspace


@dataclass(frozen=True)
class WeightData:
    """Flag basis (columns of ``flag``) with ``ad X_k`` upper triangular.

    ``weights[j][k]`` is the j-th diagonal entry of ``ad X_k`` in that basis,
    i.e. the value of the j-th weight on the k-th basis vector of g.
    """

    field: object
    flag: np.ndarray
    weights: tuple

    def multiplicities(self):
        return Counter(tuple(scalar_key(x) for x in w) for w in self.weights)


def _matrix_derived_series(mats):
    n = mats[0].shape[0] if mats else 0
    levels = []
    cur = [m for m in _mat_basis(mats, n)]
    while cur:
        levels.append(cur)
        nxt = _mat_basis([commutator(a, b) for i, a in enumerate(cur)
                          for b in cur[i + 1:]], n)
        if len(nxt) == len(cur):
            raise NonSolvableInput("ad g is not solvable")
        cur = nxt
    return levels


def _mat_basis(mats, n):
    flat = span_basis([flatten(m) for m in mats if not is_zero(m)])
    return [np.asarray(v, dtype=object).reshape(n, n) for v in flat]


def _restrict(a, w):
    """Matrix of ``a`` on the invariant subspace spanned by the list ``w``."""
    cols = []
    for v in w:
        c = coords_in_basis(w, a.dot(v))
        if c is None:
            raise InvariantViolation("subspace is not invariant")
        cols.append(list(c))
    return np.array(cols, dtype=object).T


def _common_eigenspace(ops, space, field):
    """Common eigenvectors of commuting (on ``space``) operators.

    Returns the subspace basis and the eigenvalue of each operator, always
    taking the first root in canonical order.
    """
    w = list(space)
    values = []
    for a in ops:
        r = _restrict(a, w)
        lam = _first_eigenvalue(r, field)
        ker = kernel_basis(r - lam * identity(len(w)))
        w = [sum((k[i] * w[i] for i in range(len(w))), zeros(len(w[0]))) for k in ker]
        values.append(lam)
    return w, values


def _first_eigenvalue(r, field):
    """Smallest eigenvalue of ``r`` in canonical order."""
    m = r.shape[0]
    if all(r[i, j] == 0 for i in range(m) for j in range(i)) or \
            all(r[i, j] == 0 for i in range(m) for j in range(i + 1, m)):
        return min((r[i, i] for i in range(m)), key=scalar_key)
    roots = roots_in_field(char_poly(r), field)
    if not roots:
        raise InvariantViolation("characteristic polynomial does not split")
    return roots[0]


def _weight_space(ops, values, q):
    rows = np.concatenate([a - v * identity(q) for a, v in zip(ops, values)], axis=0)
    return kernel_basis(rows)


def triangularize(g, field=None):
    """Constructive Lie theorem over a splitting field of ``ad g``.

    At each step a common eigenvector of the quotient representation is
    found by descending the derived series of ``ad g``: the full weight
    space of one level is invariant under the level above, where the
    operators commute.  The quotient by the new flag vector is then formed
    in place.
    """
    n = g.dim
    ads = g.ad_basis()
    base = field if field is not None else g.field
    k = splitting_field([char_poly(a) for a in ads], base=base)
    ads_k = [to_field(a, k) if k is not None else a for a in ads]
    levels = _matrix_derived_series(ads_k) if n else []
    ops = list(ads_k)
    lvl = [list(level) for level in levels]
    lift = identity(n)
    flag, weights = [], []
    for q in range(n, 0, -1):
        space = [_unit(q, j) for j in range(q)]
        for level in reversed(lvl):
            _, values = _common_eigenspace(level, space, k)
            space = _weight_space(level, values, q)
        v = span_basis(space)[0]
        p = next(i for i in range(q) if v[i] != 0)
        weights.append(tuple(demote(a[p, :].dot(v) / v[p]) for a in ops))
        flag.append(demote_matrix(lift.dot(v)))
        ops = [_quotient(a, v, p) for a in ops]
        lvl = [[_quotient(a, v, p) for a in level] for level in lvl]
        lift = np.delete(lift, p, axis=1)
    flag_m = np.array(flag, dtype=object).T if n else zeros(0, 0)
    wd = WeightData(k, flag_m, tuple(weights))
    _check_weights(wd, ads_k)
    return wd


def _quotient(a, v, p):
    """Induced map on the quotient by the invariant line span(v), v[p] != 0.

    Coordinates other than p serve as the quotient basis.
    """
    row = a[p, :] / v[p]
    out = a - np.outer(v, row)
    return np.delete(np.delete(out, p, axis=0), p, axis=1)


def _unit(n, j):
    v = zeros(n)
    v[j] = Fraction(1)
    return v


def _check_weights(wd, ads):
    n = len(wd.weights)
    if n == 0:
        return
    pinv = inverse(wd.flag)
    for kk, a in enumerate(ads):
        t = pinv.dot(a).dot(wd.flag)
        for i in range(n):
            if t[i, i] != wd.weights[i][kk]:
                raise InvariantViolation("flag diagonal disagrees with weights")
            for j in range(i):
                if t[i, j] != 0:
                    raise InvariantViolation("ad g not triangular in the flag basis")
    mult = wd.multiplicities()
    conj_mult = Counter(tuple(scalar_key(demote(conj(x))) for x in w) for w in wd.weights)
    if conj_mult != mult:
        raise InvariantViolation("weights not closed under conjugation")


def weight_data(g):
    wd = g._cache.get("weights")
    if wd is None:
        wd = triangularize(g)
        g._cache["weights"] = wd
    return wd


def is_completely_solvable(g):
    return all(im(x) == 0 for w in weight_data(g).weights for x in w)


def _kernel_of_rows(g, rows):
    if not rows:
        return Subspace.whole(g)
    return Subspace.span(g, kernel_basis(np.array(rows, dtype=object)))


def nilradical(g):
    """Common kernel of the real and imaginary parts of all weights."""
    sub = g._cache.get("nilradical")
    if sub is None:
        rows = []
        for w in weight_data(g).weights:
            rows.append([demote(re(x)) for x in w])
            rows.append([demote(im(x)) for x in w])
        sub = _kernel_of_rows(g, rows)
        g._cache["nilradical"] = sub
    return sub


def max_completely_solvable_ideal(g):
    """Common kernel of the imaginary parts of all weights."""
    rows = [[demote(im(x)) for x in w] for w in weight_data(g).weights]
    return _kernel_of_rows(g, rows)
