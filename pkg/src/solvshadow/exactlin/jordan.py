"""Jordan-Chevalley decomposition and the real/imaginary split of semisimple maps."""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2
from typing import Optional

import numpy as np

from ..errors import InvariantViolation, NotSemisimple
from .matrix import (
    char_poly, min_poly, matrix_poly, inverse, is_zero, commutator, identity,
    zeros, to_field, demote_matrix, matrix_field, is_squarefree, solve, flatten,
)
from .numberfield import roots_in_field, splitting_field, re, embed
from .poly import psquarefree, pderiv, pmul, pscale, padd, degree, trim

__all__ = ["JordanParts", "jordan_chevalley", "split_real_imag", "jordan_parts",
           "polynomial_in"]


@dataclass(frozen=True)
class JordanParts:
    original: np.ndarray
    semisimple: np.ndarray
    nilpotent: np.ndarray
    real_part: Optional[np.ndarray] = None
    imag_part: Optional[np.ndarray] = None


def polynomial_in(target, a):
    """Coefficients c with ``target == sum c_k a^k``, or None."""
    n = a.shape[0]
    powers, cur = [], identity(n)
    for _ in range(n):
        powers.append(flatten(cur))
        cur = cur.dot(a)
    sol = solve(np.array(powers, dtype=object).T, flatten(target))
    return None if sol is None else list(sol)


def jordan_chevalley(m):
    """Additive decomposition ``m = S + N`` with S semisimple, N nilpotent.

    Newton iteration ``S <- S - q(S) q'(S)^-1`` on the squarefree part ``q``
    of the characteristic polynomial.  The result is checked, not trusted.
    """
    n = m.shape[0]
    if n == 0:
        return JordanParts(m, m, m)
    q = psquarefree(char_poly(m))
    dq = pderiv(q)
    s = m.copy()
    budget = ceil(log2(n)) + 1 if n > 1 else 1
    for _ in range(budget):
        qs = matrix_poly(q, s)
        if is_zero(qs):
            break
        s = s - qs.dot(inverse(matrix_poly(dq, s)))
    s = demote_matrix(s)
    nil = demote_matrix(m - s)
    if not is_zero(matrix_poly(q, s)):
        raise InvariantViolation("Newton iteration did not reach a semisimple part")
    _check_jc(m, s, nil)
    return JordanParts(m, s, nil)


def _check_jc(m, s, nil):
    n = m.shape[0]
    if not is_zero(commutator(s, nil)):
        raise InvariantViolation("S and N do not commute")
    if not is_squarefree(min_poly(s)):
        raise InvariantViolation("S is not semisimple")
    if not is_zero(np.linalg.matrix_power(nil, n) if n else nil):
        raise InvariantViolation("N is not nilpotent")
    if polynomial_in(s, m) is None:
        raise InvariantViolation("S is not a polynomial in m")


def split_real_imag(s, field=None):
    """Split a semisimple real matrix into commuting real- and imaginary-spectrum parts.

    Returns ``(S_re, S_im)``.  The real part is ``P(s)`` where ``P``
    interpolates ``Re`` on the roots of the minimal polynomial; the field is
    extended when those roots are not in ``field``.  Entries that turn out
    rational are returned as Fractions.
    """
    p = min_poly(s)
    if not is_squarefree(p):
        raise NotSemisimple("minimal polynomial is not squarefree")
    base = field if field is not None else matrix_field(s)
    k = splitting_field([p], base=base)
    roots = roots_in_field(p, k)
    if len(roots) != degree(p):
        raise InvariantViolation("splitting field does not split the minimal polynomial")
    targets = [re(r) for r in roots]
    if all(t == r for t, r in zip(targets, roots)):
        return s.copy(), zeros(*s.shape)
    interp = _lagrange(roots, targets)
    sk = to_field(s, k)
    s_re = demote_matrix(matrix_poly(interp, sk))
    s_im = demote_matrix(sk - s_re)
    return s_re, s_im


def _lagrange(xs, ys):
    out = ()
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        if yj == 0:
            continue
        term = (Fraction(1),)
        denom = Fraction(1)
        for k, xk in enumerate(xs):
            if k != j:
                term = pmul(term, (-xk, Fraction(1)))
                denom = denom * (xj - xk)
        out = padd(out, pscale(term, yj / denom))
    return out


def jordan_parts(m, field=None):
    """Full decomposition including real and imaginary semisimple parts."""
    jc = jordan_chevalley(m)
    s_re, s_im = split_real_imag(jc.semisimple, field=field)
    return JordanParts(m, jc.semisimple, jc.nilpotent, s_re, s_im)
