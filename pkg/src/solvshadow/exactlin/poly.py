"""Dense univariate polynomials over exact scalars.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros.  The zero polynomial is the empty tuple.  Coefficients may be
``Fraction`` or ``FieldElement``; every routine here only uses field
operations and exact equality.
"""
from fractions import Fraction
from math import ceil

__all__ = [
    "trim", "degree", "lc", "padd", "psub", "pmul", "pscale", "pdivmod",
    "pmonic", "pgcd", "pderiv", "psquarefree", "peval", "pcompose_linear",
    "sturm_sequence", "count_real_roots", "count_roots_between", "isolate_real_roots", "pstr",
]


def _is_zero(c):
    return c == 0


def trim(p):
    p = list(p)
    while p and _is_zero(p[-1]):
        p.pop()
    return tuple(p)


def degree(p):
    return len(p) - 1 if p else -1


def lc(p):
    return p[-1]


def padd(p, q):
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else 0
        b = q[k] if k < len(q) else 0
        out.append(a + b)
    return trim(out)


def pscale(p, c):
    return trim([a * c for a in p])


def psub(p, q):
    return padd(p, pscale(q, -1))


def pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def pdivmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = degree(q)
    lead = q[-1]
    quot = [0] * max(len(p) - dq, 0)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = r[k + dq]
        if _is_zero(c):
            continue
        c = c / lead
        quot[k] = c
        for j, b in enumerate(q):
            r[k + j] = r[k + j] - c * b
    return trim(quot), trim(r[:dq] if dq > 0 else [])


def pmonic(p):
    if not p:
        return p
    return pscale(p, 1 / _as_scalar(p[-1]))


def _as_scalar(c):
    return Fraction(c) if isinstance(c, int) else c


def pgcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, pdivmod(p, q)[1]
    return pmonic(p)


def pderiv(p):
    return trim([k * p[k] for k in range(1, len(p))])


def psquarefree(p):
    """Monic squarefree part ``p / gcd(p, p')``."""
    p = trim(p)
    if degree(p) <= 0:
        return (Fraction(1),) if p else ()
    g = pgcd(p, pderiv(p))
    return pmonic(pdivmod(p, g)[0])


def peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pcompose_linear(p, a, b):
    """Return ``p(a*x + b)``."""
    out = ()
    lin = trim((b, a))
    for c in reversed(p):
        out = padd(pmul(out, lin), trim((c,)))
    return out


def pstr(p, var="x"):
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if _is_zero(c):
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = str(c)
        if mono and cs == "1":
            terms.append(mono)
        elif mono and cs == "-1":
            terms.append("-" + mono)
        elif mono:
            terms.append(f"({cs})*{mono}" if "/" in cs or " " in cs else f"{cs}*{mono}")
        else:
            terms.append(cs)
    return " + ".join(terms).replace("+ -", "- ")


# --- real roots of rational polynomials ------------------------------------

def sturm_sequence(p):
    p = trim(p)
    seq = [p, pderiv(p)]
    while seq[-1]:
        r = pdivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(pscale(r, -1))
    return [s for s in seq if s]


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _sign_at(seq, x, sign_fn):
    return _sign_changes([sign_fn(peval(s, x)) for s in seq])


def _sign_at_inf(seq, positive, sign_fn):
    vals = []
    for s in seq:
        v = sign_fn(lc(s))
        if not positive and degree(s) % 2 == 1:
            v = -v
        vals.append(v)
    return _sign_changes(vals)


def _frac_sign(x):
    return (x > 0) - (x < 0)


def count_real_roots(p, sign_fn=None):
    """Number of distinct real roots of ``p`` (Sturm's theorem).

    ``sign_fn`` decides the sign of a coefficient; it defaults to rational
    comparison and must be supplied for real algebraic coefficients.
    """
    sign_fn = sign_fn or _frac_sign
    p = trim(p)
    if degree(p) <= 0:
        return 0
    seq = sturm_sequence(p)
    return _sign_at_inf(seq, False, sign_fn) - _sign_at_inf(seq, True, sign_fn)


def count_roots_between(p, a, b):
    """Distinct real roots of a rational polynomial in the half-open ``(a, b]``."""
    seq = sturm_sequence(psquarefree(p))
    return _sign_at(seq, a, _frac_sign) - _sign_at(seq, b, _frac_sign)


def _cauchy_bound(p):
    lead = abs(Fraction(lc(p)))
    m = max(abs(Fraction(c)) for c in p[:-1]) if len(p) > 1 else Fraction(0)
    return 1 + ceil(m / lead)


def isolate_real_roots(p):
    """Disjoint rational intervals, one per distinct real root of ``p``.

    Each interval is a pair ``(a, b)``.  ``a == b`` marks an exact rational
    root; otherwise the root lies in the open interval ``(a, b)`` and the
    endpoints are not roots.  Intervals come sorted left to right.
    """
    p = trim([Fraction(c) for c in p])
    if not p:
        raise ValueError("zero polynomial has no isolated roots")
    if degree(p) == 0:
        return []
    p = psquarefree(p)
    seq = sturm_sequence(p)
    bound = Fraction(_cauchy_bound(p))

    def count(a, b):
        # distinct roots in (a, b]
        return _sign_at(seq, a, _frac_sign) - _sign_at(seq, b, _frac_sign)

    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if peval(p, mid) != 0:
            stack += [(a, mid), (mid, b)]
            continue
        out.append((mid, mid))
        eps = (b - a) / 4
        while count(mid - eps, mid + eps) != 1 or peval(p, mid - eps) == 0 or peval(p, mid + eps) == 0:
            eps /= 2
        stack += [(a, mid - eps), (mid + eps, b)]
    out.sort()
    return out
