import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from solvshadow.errors import NotSemisimple
from solvshadow.exactlin import (
    mat, zeros, identity, kernel_basis, rank, min_poly, char_poly,
    isolate_real_roots, count_real_roots, all_eigenvalues_real,
    purely_imaginary_spectrum, jordan_chevalley, split_real_imag, jordan_parts,
    is_zero, commutator, NumberField, GAUSSIAN, conj, re, im, sign,
)
from solvshadow.exactlin.matrix import matrix_poly, is_squarefree
from solvshadow.exactlin.poly import pmul, peval

from conftest import F, matrices, known_decomposition, as_list


def _sym(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def _poly_from_roots(roots, quads=(), real_quads=()):
    p = (F(1),)
    for r in roots:
        p = pmul(p, (-r, F(1)))
    for b, c in quads:
        p = pmul(p, (c, b, F(1)))
    for c in real_quads:
        p = pmul(p, (-c, F(0), F(1)))
    return p


# --- kernels -----------------------------------------------------------------

def test_kernel_identity_is_empty():
    assert kernel_basis(identity(3)) == []


def test_kernel_zero_is_standard_basis():
    ker = kernel_basis(zeros(2, 2))
    assert [list(v) for v in ker] == [[1, 0], [0, 1]]


def test_kernel_rank_one():
    (v,) = kernel_basis(mat([[1, 1], [1, 1]]))
    assert v[0] == -v[1] != 0


@given(matrices(max_dim=5))
def test_kernel_matches_sympy_nullity(m):
    ker = kernel_basis(m)
    assert len(ker) == m.shape[1] - _sym(m).rank()
    for v in ker:
        assert all(x == 0 for x in m.dot(v))
    assert rank(m) == _sym(m).rank()


# --- polynomials of matrices ------------------------------------------------

def test_min_poly_examples():
    assert min_poly(identity(2)) == (-1, 1)
    assert min_poly(mat([[0, -1], [1, 0]])) == (1, 0, 1)
    assert min_poly(mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])) == (0, 0, 0, 1)


@given(matrices())
def test_char_poly_matches_sympy(m):
    x = sympy.Symbol("x")
    ours = sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(char_poly(m)))
    assert sympy.expand(ours - _sym(m).charpoly(x).as_expr()) == 0


@given(matrices())
def test_min_poly_is_minimal(m):
    # oracle: p annihilates m and p/f does not for any irreducible factor f
    p = min_poly(m)
    assert p[-1] == 1
    assert is_zero(matrix_poly(p, m))
    x = sympy.Symbol("x")
    sp = sympy.Poly(list(reversed(p)), x, domain="QQ")
    cp = sympy.Poly(list(reversed(char_poly(m))), x, domain="QQ")
    assert cp.rem(sp).is_zero
    for f, _ in sp.factor_list()[1]:
        q = sp.quo(f)
        coeffs = tuple(F(str(c)) for c in reversed(q.all_coeffs()))
        assert not is_zero(matrix_poly(coeffs, m))


# --- real roots ---------------------------------------------------------------

def test_isolate_sqrt2():
    ivs = isolate_real_roots((-2, 0, 1))
    assert len(ivs) == 2
    (a, b), (c, d) = ivs
    assert b <= c
    for lo, hi in ivs:
        assert (lo * lo - 2) * (hi * hi - 2) < 0


def test_isolate_no_real_roots():
    assert isolate_real_roots((1, 0, 1)) == []


def test_isolate_triple_zero():
    (iv,) = isolate_real_roots((0, 0, 0, 1))
    assert iv[0] <= 0 <= iv[1]


@settings(max_examples=60)
@given(st.lists(st.integers(-6, 6).map(F), max_size=4),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 4)), max_size=2),
       st.lists(st.sampled_from([2, 3, 5, 7]), max_size=2, unique=True))
def test_isolate_counts_factor_list(roots, quads, real_quads):
    # x^2 + bx + c with b^2 < 4c has no real roots
    quads = [(F(b), F(b * b // 4 + c)) for b, c in quads]
    p = _poly_from_roots(roots, quads, [F(c) for c in real_quads])
    ivs = isolate_real_roots(p)
    expected = len(set(roots)) + 2 * len(real_quads)
    assert len(ivs) == expected == count_real_roots(p)
    for (_, b), (c, _) in zip(ivs, ivs[1:]):
        assert b <= c
    for a, b in ivs:
        if a == b:
            assert peval(p, a) == 0
        else:
            assert peval(p, a) != 0 and peval(p, b) != 0


def test_isolate_matches_sympy_real_roots():
    rnd = random.Random(7)
    for _ in range(40):
        coeffs = [F(rnd.randint(-5, 5)) for _ in range(rnd.randint(2, 6))] + [F(1)]
        ivs = isolate_real_roots(coeffs)
        x = sympy.Symbol("x")
        sp = sympy.Poly(list(reversed([sympy.Integer(int(c)) for c in coeffs])), x)
        assert len(ivs) == len(set(sympy.real_roots(sp)))


# --- spectra --------------------------------------------------------------------

def test_all_eigenvalues_real_examples():
    assert not all_eigenvalues_real(mat([[0, -1], [1, 0]]))
    assert all_eigenvalues_real(mat([[1, 5, -2], [0, 3, 7], [0, 0, -1]]))
    assert not all_eigenvalues_real(mat([[1, -1], [1, 1]]))


@given(matrices())
def test_all_eigenvalues_real_matches_sympy(m):
    x = sympy.Symbol("x")
    sq = sympy.sqf_part(_sym(m).charpoly(x).as_expr())
    sp = sympy.Poly(sq, x)
    assert all_eigenvalues_real(m) == (sp.count_roots() == sp.degree())


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_purely_imaginary_rotation_blocks(a, b):
    m = mat([[a, -b], [b, a]])
    assert purely_imaginary_spectrum(m) == (a == 0)


# --- Jordan-Chevalley -----------------------------------------------------------

@pytest.mark.parametrize("m,s,n", [
    ([[1, 1], [0, 1]], [[1, 0], [0, 1]], [[0, 1], [0, 0]]),
    ([[1, 1], [0, 2]], [[1, 1], [0, 2]], [[0, 0], [0, 0]]),
    ([[0, 1], [0, 0]], [[0, 0], [0, 0]], [[0, 1], [0, 0]]),
])
def test_jordan_chevalley_examples(m, s, n):
    jc = jordan_chevalley(mat(m))
    assert as_list(jc.semisimple) == s
    assert as_list(jc.nilpotent) == n


@given(matrices())
def test_jordan_chevalley_postconditions(m):
    jc = jordan_chevalley(m)
    s, n = jc.semisimple, jc.nilpotent
    assert as_list(s + n) == as_list(m)
    assert is_zero(commutator(s, n))
    assert is_squarefree(min_poly(s))
    assert is_zero(np.linalg.matrix_power(n, m.shape[0]))
    assert is_zero(commutator(s, m))


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_jordan_chevalley_known_parts(seed, n):
    m, s, nil, _, _ = known_decomposition(random.Random(seed), n)
    jc = jordan_chevalley(m)
    assert as_list(jc.semisimple) == as_list(s)
    assert as_list(jc.nilpotent) == as_list(nil)


def test_jordan_chevalley_deterministic():
    m = mat([[2, 1, 0], [-1, 0, 3], [0, 1, 1]])
    a, b = jordan_chevalley(m), jordan_chevalley(m)
    assert as_list(a.semisimple) == as_list(b.semisimple)


# --- real/imaginary split -------------------------------------------------------

def test_split_examples():
    d = mat([[1, 0], [0, 2]])
    re_, im_ = split_real_imag(d)
    assert as_list(re_) == as_list(d) and is_zero(im_)
    j = mat([[0, -1], [1, 0]])
    re_, im_ = split_real_imag(j)
    assert is_zero(re_) and as_list(im_) == as_list(j)
    re_, im_ = split_real_imag(mat([[1, -1], [1, 1]]))
    assert as_list(re_) == [[1, 0], [0, 1]]
    assert as_list(im_) == [[0, -1], [1, 0]]


def test_split_rejects_non_semisimple():
    with pytest.raises(NotSemisimple):
        split_real_imag(mat([[1, 1], [0, 1]]))


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_split_known_parts(seed, n):
    _, s, _, s_re, s_im = known_decomposition(random.Random(seed), n)
    re_, im_ = split_real_imag(s)
    assert as_list(re_) == as_list(s_re)
    assert as_list(im_) == as_list(s_im)
    assert all_eigenvalues_real(re_)
    assert purely_imaginary_spectrum(im_)
    assert is_zero(commutator(re_, im_))


def test_split_irrational_real_parts():
    # eigenvalues sqrt2 ± i: real part is not rational-diagonalizable
    s = mat([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-9, 0, 2, 0]])
    parts = jordan_parts(s)
    re_, im_ = parts.real_part, parts.imag_part
    assert is_zero(parts.nilpotent)
    assert is_zero(commutator(re_, im_))
    assert all_eigenvalues_real(re_)
    assert purely_imaginary_spectrum(im_)
    assert as_list(re_ + im_) == as_list(s)


# --- number fields -------------------------------------------------------------

def test_gaussian_basics():
    i = GAUSSIAN.gen
    assert i * i == -1
    assert conj(i) == -i
    z = 3 + 2 * i
    assert re(z) == 3 and im(z) == 2
    assert z * conj(z) == 13


def test_field_interning():
    assert NumberField((1, 0, 1), 1) is GAUSSIAN


gauss = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(
    lambda t: GAUSSIAN.element([F(t[0]), F(t[1])]))


@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert conj(a * b) == conj(a) * conj(b)
    if a != 0:
        assert a * (1 / a) == 1


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_sqrt2_sign_agrees_with_float(p, q):
    k = NumberField((-2, 0, 1), 1)
    z = k.element([F(p), F(q)])
    expect = (p + q * 2 ** 0.5 > 0) - (p + q * 2 ** 0.5 < 0)
    assert sign(z) == expect
