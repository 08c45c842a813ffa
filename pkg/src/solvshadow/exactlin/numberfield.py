"""Exact scalars: rationals and elements of embedded algebraic number fields.

Rationals are plain :class:`fractions.Fraction`.  A :class:`NumberField` is
``Q[x]/(m)`` together with a distinguished complex root of ``m``; elements
are :class:`FieldElement` coefficient vectors in the power basis of that
root.  Ordering, real/imaginary parts and complex conjugation are decided
exactly by refining a rational isolating box around the root.

Factorisation over ``Q`` and over number fields, primitive elements and
complex root isolation are delegated to sympy; everything that touches
matrices lives in this package.
"""
from fractions import Fraction
from math import gcd
from itertools import count

import sympy

from ..errors import FieldMismatch, InvariantViolation
from .poly import trim, pdivmod, degree, pmonic, count_real_roots, count_roots_between

__all__ = [
    "NumberField", "FieldElement", "GAUSSIAN", "is_rational", "demote",
    "conj", "re", "im", "is_real", "sign", "scalar_key", "scalar_str",
    "embed", "roots_in_field", "splitting_field", "norm_poly",
    "field_of", "common_field", "imag_unit", "factor_rational",
]

_X = sympy.Symbol("x")


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    # gmpy2.mpq / sympy Rational
    return Fraction(int(c.numerator), int(c.denominator))


def _to_sympy_poly(p):
    """Integer-free sympy Poly from a rational coefficient tuple (low first)."""
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)], _X)


def _crootof(p, j):
    """``CRootOf`` of an irreducible rational polynomial without sympy's rescaling.

    ``sympy.CRootOf`` may return e.g. ``3*CRootOf(q, 0)`` after substituting
    a scaled variable; the isolation code needs the bare root object.
    """
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    poly = sympy.PurePoly([sympy.Integer(c // g) for c in reversed(ints)], _X, domain=sympy.ZZ)
    return sympy.CRootOf._new(poly, j)


# --- complex rectangles ----------------------------------------------------

def _imul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(prods), max(prods))


def _rmul(z, w):
    """Product of complex rectangles ``(ax, bx, ay, by)``."""
    x1, x2 = _imul(z[:2], w[:2]), _imul(z[2:], w[2:])
    y1, y2 = _imul(z[:2], w[2:]), _imul(z[2:], w[:2])
    return (x1[0] - x2[1], x1[1] - x2[0], y1[0] + y2[0], y1[1] + y2[1])


def _radd(z, w):
    return (z[0] + w[0], z[1] + w[1], z[2] + w[2], z[3] + w[3])


def _rpoint(c):
    return (c, c, Fraction(0), Fraction(0))


def _reval(coeffs, box):
    acc = _rpoint(Fraction(0))
    for c in reversed(coeffs):
        acc = _radd(_rmul(acc, box), _rpoint(c))
    return acc


def _rdisjoint(z, w):
    return z[1] < w[0] or w[1] < z[0] or z[3] < w[2] or w[3] < z[2]


def _root_box(root, width):
    """Isolating rectangle of a sympy CRootOf refined below ``width``."""
    w = sympy.Rational(width.numerator, width.denominator)
    if root.is_real:
        root.eval_rational(dx=w, n=2)
        iv = root._get_interval()
        return (_frac(iv.a), _frac(iv.b), Fraction(0), Fraction(0))
    root.eval_rational(dx=w, dy=w, n=2)
    iv = root._get_interval()
    return (_frac(iv.ax), _frac(iv.bx), _frac(iv.ay), _frac(iv.by))


class NumberField:
    """``Q(alpha)`` with ``alpha`` a chosen root of an irreducible monic polynomial.

    ``root_index`` follows sympy's ``CRootOf`` numbering (real roots first,
    increasing, then complex roots).  Fields compare equal when both the
    minimal polynomial and the chosen root agree.
    """

    _registry = {}

    def __new__(cls, minpoly, root_index):
        key = (tuple(_frac(c) for c in minpoly), root_index)
        inst = cls._registry.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst._ready = False
        return inst

    def __init__(self, minpoly, root_index):
        if self._ready:
            return
        mp = tuple(_frac(c) for c in minpoly)
        if not mp or mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if degree(mp) < 2:
            raise ValueError("number fields of degree < 2 are represented by Fraction")
        if not _to_sympy_poly(mp).is_irreducible:
            raise ValueError(f"{mp} is reducible over Q")
        self.minpoly = mp
        self.root_index = root_index
        self.degree = degree(mp)
        self._key = (mp, root_index)
        self._hash = hash(self._key)
        # value-local caches, filled on demand
        self._cache = {}
        # field -> FieldElement of self giving the image of that field's generator
        self.embeddings = {}
        self._reduce = self._reduction_table()
        self.is_real = bool(self.root.is_real)
        if self.is_real:
            a, b, _, _ = self.box(Fraction(1))
            if a != b and count_roots_between(mp, a, b) != 1:
                raise InvariantViolation("isolating interval does not isolate the root")
        self.embeddings[self] = self.gen
        self._ready = True
        NumberField._registry[self._key] = self

    # identity ---------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .poly import pstr
        return f"NumberField({pstr(self.minpoly)}, root={self.root_index})"

    # construction helpers ---------------------------------------------------
    @property
    def root(self):
        r = self._cache.get("root")
        if r is None:
            r = _crootof(self.minpoly, self.root_index)
            self._cache["root"] = r
        return r

    @property
    def sympy_domain(self):
        d = self._cache.get("domain")
        if d is None:
            d = sympy.QQ.algebraic_field(self.root)
            mod = [_frac(c) for c in d.mod.to_list()]
            # sympy may keep an integer multiple of the minimal polynomial
            if tuple(reversed([c / mod[0] for c in mod])) != self.minpoly:
                raise InvariantViolation("sympy picked a different primitive element")
            self._cache["domain"] = d
        return d

    def _reduction_table(self):
        # x^(d+k) mod minpoly, for k = 0 .. d-2
        d = self.degree
        table = []
        cur = [-c for c in self.minpoly[:-1]]
        for _ in range(d - 1):
            table.append(tuple(cur))
            nxt = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            nxt = [nxt[i] - top * self.minpoly[i] for i in range(d)]
            cur = nxt
        return table

    def element(self, coeffs):
        c = [_frac(x) for x in coeffs]
        if len(c) > self.degree:
            c = list(pdivmod(tuple(c), self.minpoly)[1])
        c += [Fraction(0)] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    @property
    def gen(self):
        return self.element([0, 1])

    def box(self, width):
        return _root_box(self.root, width)

    def contains_gen_of(self, other):
        return other == self or other in self.embeddings


class FieldElement:
    __slots__ = ("field", "c")

    def __init__(self, field, coeffs):
        self.field = field
        self.c = coeffs

    # coercion ---------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.c
            if other.is_rational():
                return (other.c[0],) + (Fraction(0),) * (self.field.degree - 1)
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def _mixed(self, other):
        return (isinstance(other, FieldElement) and other.field != self.field
                and not other.is_rational())

    def __add__(self, other):
        if self._mixed(other):
            a, b = promote(self, other)
            return a + b
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        if self._mixed(other):
            a, b = promote(self, other)
            return a - b
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.c, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.c))
        if self._mixed(other):
            a, b = promote(self, other)
            return a * b
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k, hi in enumerate(prod[d:]):
            if hi:
                row = self.field._reduce[k]
                for i in range(d):
                    out[i] += hi * row[i]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.c):
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid in Q[x]: s*a + t*m = 1
        a, m = trim(self.c), self.field.minpoly
        r0, r1 = m, a
        s0, s1 = (), (Fraction(1),)
        from .poly import psub, pmul
        while degree(r1) > 0:
            q, r = pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, psub(s0, pmul(q, s1))
        inv = tuple(c / r1[0] for c in s1)
        return self.field.element(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a / other for a in self.c))
        if isinstance(other, FieldElement):
            if self._mixed(other):
                a, b = promote(self, other)
                return a / b
            self._coerce(other)
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.element([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                if other.is_rational():
                    return self == other.c[0]
                if self.is_rational():
                    return other == self.c[0]
                try:
                    a, b = promote(self, other)
                except FieldMismatch:
                    return False
                return a.c == b.c
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.field, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return f"FieldElement({scalar_str(self)})"

    __str__ = lambda self: scalar_str(self)

    # ordering is only defined for real elements
    def __lt__(self, other):
        return sign(self - other) < 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def is_rational(self):
        return not any(self.c[1:])

    def box(self, width):
        return _reval(self.c, self.field.box(width))


GAUSSIAN = NumberField((1, 0, 1), 1)
GAUSSIAN.embeddings[GAUSSIAN] = GAUSSIAN.gen


# --- scalar helpers that accept Fraction or FieldElement --------------------

def is_rational(z):
    return not isinstance(z, FieldElement) or z.is_rational()


def demote(z):
    """Return a Fraction when ``z`` is rational, else ``z`` unchanged."""
    if isinstance(z, FieldElement):
        return z.c[0] if z.is_rational() else z
    return Fraction(z)


def field_of(z):
    return z.field if isinstance(z, FieldElement) else None


def common_field(values):
    """The single number field among ``values`` (None if all rational)."""
    found = None
    for v in values:
        if isinstance(v, FieldElement) and not v.is_rational():
            if found is None:
                found = v.field
            elif v.field != found:
                raise FieldMismatch(f"{found} vs {v.field}")
    return found


def imag_unit(field):
    """The element ``i`` of ``field`` (positive imaginary part)."""
    if field is None:
        raise FieldMismatch("the rationals do not contain i")
    i = field._cache.get("i")
    if i is None:
        cands = [r for r in roots_in_field((Fraction(1), Fraction(0), Fraction(1)), field)]
        if not cands:
            raise FieldMismatch(f"{field} does not contain i")
        i = next(r for r in cands if _positive_imag(r))
        field._cache["i"] = i
    return i


def _positive_imag(z):
    for k in count(1):
        b = z.box(Fraction(1, 2 ** k))
        if b[2] > 0:
            return True
        if b[3] < 0:
            return False


def _conj_gen(field):
    """Image of the generator under complex conjugation."""
    cg = field._cache.get("conj")
    if cg is None:
        if field.is_real:
            cg = field.gen
        elif field == GAUSSIAN:
            cg = -field.gen
        else:
            cands = roots_in_field(field.minpoly, field)
            if len(cands) != field.degree:
                raise FieldMismatch(f"{field} is not closed under conjugation")
            cg = _identify_conjugate(field, cands)
        field._cache["conj"] = cg
    return cg


def _identify_conjugate(field, cands):
    for k in count(2):
        w = Fraction(1, 2 ** k)
        gb = field.box(w)
        mirror = (gb[0], gb[1], -gb[3], -gb[2])
        hits = [c for c in cands if not _rdisjoint(_reval(c.c, gb), mirror)]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise InvariantViolation("conjugate root not found among field roots")


def conj(z):
    if not isinstance(z, FieldElement):
        return z
    if z.field.is_real or z.is_rational():
        return z
    cg = _conj_gen(z.field)
    acc = z.field.element([0])
    for c in reversed(z.c):
        acc = acc * cg + c
    return acc


def is_real(z):
    return conj(z) == z


def re(z):
    if not isinstance(z, FieldElement) or z.field.is_real:
        return z
    return demote((z + conj(z)) / 2)


def im(z):
    if not isinstance(z, FieldElement) or z.field.is_real:
        return Fraction(0)
    d = z - conj(z)
    if not d:
        return Fraction(0)
    return demote(d / (2 * imag_unit(z.field)))


def sign(z):
    """Sign of a real scalar, decided by box refinement for field elements."""
    if not isinstance(z, FieldElement):
        return (z > 0) - (z < 0)
    if z.is_rational():
        c = z.c[0]
        return (c > 0) - (c < 0)
    if not is_real(z):
        raise ValueError("sign of a non-real number")
    for k in count(1):
        b = z.box(Fraction(1, 2 ** k))
        if b[0] > 0:
            return 1
        if b[1] < 0:
            return -1


def scalar_key(z):
    """Canonical total order used for deterministic tie-breaking."""
    if isinstance(z, FieldElement):
        if z.is_rational():
            return (0, z.c[0], ())
        return (1, Fraction(0), z.c)
    return (0, Fraction(z), ())


def scalar_str(z):
    if isinstance(z, FieldElement):
        if z.is_rational():
            return str(z.c[0])
        name = "i" if z.field == GAUSSIAN else "a"
        terms = []
        for k, c in enumerate(z.c):
            if not c:
                continue
            mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")
    return str(Fraction(z))


def promote(a, b):
    """Bring two field elements into whichever of their fields contains the other."""
    if b.field in a.field.embeddings:
        return a, embed(b, a.field)
    if a.field in b.field.embeddings:
        return embed(a, b.field), b
    raise FieldMismatch(f"{a.field} vs {b.field}")


def embed(z, field):
    """Map a scalar into ``field`` (None means the rationals)."""
    if not isinstance(z, FieldElement):
        return Fraction(z) if field is None else field.element([z])
    if field is None:
        if z.is_rational():
            return z.c[0]
        raise FieldMismatch("cannot embed an irrational element into Q")
    if z.field is field or z.field == field:
        return z
    if z.is_rational():
        return field.element([z.c[0]])
    image = field.embeddings.get(z.field)
    if image is None:
        raise FieldMismatch(f"no embedding of {z.field} into {field}")
    acc = field.element([0])
    for c in reversed(z.c):
        acc = acc * image + c
    return acc


# --- factorisation and roots ------------------------------------------------

def factor_rational(p):
    """Monic irreducible factors of a rational polynomial with multiplicities."""
    p = trim([_frac(c) for c in p])
    if degree(p) <= 0:
        return []
    _, facs = _to_sympy_poly(p).factor_list()
    out = []
    for f, e in facs:
        coeffs = tuple(reversed([_frac(c) for c in f.all_coeffs()]))
        out.append((pmonic(coeffs), e))
    out.sort(key=lambda fe: (len(fe[0]), fe[0]))
    return out


def _to_anp(z, dom):
    if isinstance(z, FieldElement):
        coeffs = list(reversed(z.c))
    else:
        coeffs = [Fraction(z)]
    return dom([sympy.QQ(c.numerator, c.denominator) for c in coeffs])


def roots_in_field(p, field):
    """Distinct roots of ``p`` lying in ``field`` (None = Q), canonically ordered."""
    p = trim(p)
    if degree(p) <= 0:
        return []
    key = ("roots", tuple(scalar_key(c) for c in p))
    cache = field._cache if field is not None else None
    if cache is not None and key in cache:
        return cache[key]
    if field is None:
        roots = [-f[0] for f, _ in factor_rational(p) if len(f) == 2]
    else:
        dom = field.sympy_domain
        coeffs = [_to_anp(embed(c, field), dom) for c in reversed(p)]
        poly = sympy.Poly.from_list(coeffs, _X, domain=dom)
        roots = []
        for f, _ in poly.factor_list()[1]:
            if f.degree() == 1:
                a, b = f.rep.to_list()
                r = -b / a
                roots.append(demote(field.element(list(reversed(
                    [_frac(c) for c in r.to_list()])))))
        roots = [embed(r, field) for r in roots]
    roots.sort(key=scalar_key)
    if cache is not None:
        cache[key] = roots
    return roots


def norm_poly(p, field):
    """Rational polynomial whose roots include every root of ``p`` over ``field``."""
    if all(is_rational(c) for c in p):
        return tuple(demote(c) for c in p)
    big = [trim(embed(c, field).c) for c in p]
    return pmonic(_resultant_in_y(field.minpoly, big))


def _resultant_in_y(m, big):
    """Res_y(m(y), big(x, y)) as a rational polynomial in x (low first).

    ``big`` maps powers of x to rational coefficient tuples in y.
    """
    y = sympy.Symbol("y")
    my = sum(sympy.Rational(c.numerator, c.denominator) * y ** k for k, c in enumerate(m))
    by = 0
    for k, cy in enumerate(big):
        by += sum(sympy.Rational(c.numerator, c.denominator) * y ** j
                  for j, c in enumerate(cy)) * _X ** k
    res = sympy.Poly(sympy.resultant(sympy.Poly(my, y), sympy.Poly(by, y)), _X)
    return trim(tuple(reversed([_frac(c) for c in res.all_coeffs()])))


def adjoin(field, f, j):
    """Smallest embedded field containing ``field`` and ``CRootOf(f, j)``.

    ``f`` must be a monic irreducible rational polynomial.  Returns the new
    field (equal to ``field`` when the root is already present).  The new
    generator is ``beta + s*alpha``, with the shift ``s`` chosen so the norm
    resultant is squarefree.
    """
    f = tuple(_frac(c) for c in f)
    rootexpr = _crootof(f, j)
    if field is None:
        nf = NumberField(f, j)
        nf.embeddings[nf] = nf.gen
        return nf
    m = field.minpoly
    from .poly import pcompose_linear, psquarefree, pgcd
    for shift in (1, -1, 2, -2, 3, -3, 5, 7, 11):
        # f(x - shift*y) as a polynomial in x with coefficients in Q[y]
        big = _shifted(f, shift)
        res = _resultant_in_y(m, big)
        if degree(psquarefree(res)) == degree(res):
            break
    else:
        raise InvariantViolation("no separating shift found")
    shift = Fraction(shift)
    parts = [lambda w: _root_box(rootexpr, w), lambda w: field.box(w)]
    g, idx = _identify_among_factors(res, parts, (Fraction(1), shift))
    if degree(g) == field.degree:
        return field
    new = NumberField(g, idx)
    theta = new.gen
    # alpha is the unique common root of m(y) and f(theta - shift*y)
    h = pgcd(tuple(new.element([c]) for c in m), pcompose_linear(f, -shift, theta))
    if degree(h) != 1:
        raise InvariantViolation("primitive element gcd is not linear")
    alpha = -h[0]
    new.embeddings[new] = new.gen
    new.embeddings[field] = alpha
    for older, img in field.embeddings.items():
        if older != field:
            new.embeddings[older] = embed(img, new)
    return new


def _shifted(f, shift):
    """Coefficients (in x) of f(x - shift*y), each a tuple in y."""
    from math import comb
    n = degree(f)
    out = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for k, c in enumerate(f):
        # (x - s y)^k = sum_i C(k,i) x^i (-s y)^(k-i)
        for i in range(k + 1):
            out[i][k - i] += c * comb(k, i) * Fraction(-shift) ** (k - i)
    return [trim(row) for row in out]


def _identify_among_factors(res, parts, coeffs):
    """(irreducible factor, CRootOf index) of the root ``sum coeffs*parts``."""
    cands = []
    for g, _ in factor_rational(res):
        cands += [(g, k, _crootof(g, k)) for k in range(degree(g))]
    for k in count(2):
        w = Fraction(1, 2 ** k)
        box = _rpoint(Fraction(0))
        for c, part in zip(coeffs, parts):
            box = _radd(box, _rmul(_rpoint(c), part(w)))
        hits = [(g, idx) for g, idx, r in cands if not _rdisjoint(_root_box(r, w), box)]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise InvariantViolation("primitive element not located among roots")


def splitting_field(polys, base=None):
    """A field over which every polynomial in ``polys`` splits.

    Returns None when all roots are rational.  Whenever a non-real root
    occurs the result contains ``i``; the result is closed under complex
    conjugation.  Extension order: Q, Q(i), then primitive-element towers.
    """
    facs = []
    for p in polys:
        q = norm_poly(p, base) if base is not None else tuple(demote(c) for c in p)
        for f, _ in factor_rational(q):
            if len(f) > 2 and f not in facs:
                facs.append(f)
    facs.sort(key=lambda f: (len(f), f))
    field = base
    if not facs:
        return field
    need_i = any(count_real_roots(f) < degree(f) for f in facs)
    if need_i and (field is None or not _has_i(field)):
        field = GAUSSIAN if field is None else adjoin(field, (1, 0, 1), 1)
    for f in facs:
        j = 0
        while len(roots_in_field(f, field)) < degree(f):
            grown = adjoin(field, f, j)
            j += 1
            if grown != field:
                field = grown
                j = 0
    return field


def _has_i(field):
    if field is None:
        return False
    if field == GAUSSIAN:
        return True
    return bool(roots_in_field((Fraction(1), Fraction(0), Fraction(1)), field))
