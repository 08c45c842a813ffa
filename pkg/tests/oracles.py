"""Independent reference computations used only by the tests.

None of these share code paths with the package beyond building ``ad``
matrices; linear algebra goes through sympy.
"""
import itertools
from fractions import Fraction

import numpy as np
import sympy


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def ad_matrices(g):
    # column j of ad X_i is [X_i, X_j]
    n = g.dim
    return [to_sympy([[g.c[i, j, k] for j in range(n)] for k in range(n)]) for i in range(n)]


def ad_of(g, x):
    ads = ad_matrices(g)
    out = sympy.zeros(g.dim, g.dim)
    for xi, a in zip(x, ads):
        out += sympy.Rational(Fraction(xi).numerator, Fraction(xi).denominator) * a
    return out


def derivation_dim(g):
    """dim Der(g) by solving the derivation equations symbolically."""
    n = g.dim
    ds = sympy.symbols(f"d0:{n * n}")
    d = sympy.Matrix(n, n, ds)
    ads = ad_matrices(g)
    eqs = []
    for i in range(n):
        for j in range(n):
            # D[X_i, X_j] = [D X_i, X_j] + [X_i, D X_j]
            lhs = d * ads[i][:, j]
            rhs = -ads[j] * d[:, i] + ads[i] * d[:, j]
            eqs.extend(list(lhs - rhs))
    a, _ = sympy.linear_eq_to_matrix(eqs, ds)
    return n * n - a.rank()


def associative_envelope(mats, n):
    """Basis of the unital associative algebra generated by ``mats``."""
    basis = [sympy.eye(n)]
    frontier = list(basis)
    while frontier:
        new = []
        for a in frontier:
            for m in mats:
                cand = a * m
                stacked = sympy.Matrix([list(b) for b in basis + [cand]])
                if stacked.rank() > len(basis):
                    basis.append(cand)
                    new.append(cand)
        frontier = new
    return basis


def nilradical_by_traces(g):
    """{x : tr(ad x . a) = 0 for every a in the envelope of ad g}.

    For solvable g this is the set of ad-nilpotent elements: in a common
    triangular basis the pairing becomes sum_j lambda_j(x) mu_j(a), and a
    Vandermonde argument over powers of a generic ad y forces every
    lambda_j(x) to vanish.
    """
    n = g.dim
    ads = ad_matrices(g)
    env = associative_envelope(ads, n)
    rows = [[(a_i * e).trace() for a_i in ads] for e in env]
    ker = sympy.Matrix(rows).nullspace()
    return sympy_rref_rows(ker, n)


def sympy_rref_rows(vectors, n):
    if not vectors:
        return sympy.zeros(0, n)
    m, _ = sympy.Matrix.hstack(*vectors).T.rref()
    return m[: sympy.Matrix.hstack(*vectors).rank(), :]


def rref_of(sub_basis, n):
    """RREF rows of a package Subspace basis, as a sympy matrix."""
    if not sub_basis:
        return sympy.zeros(0, n)
    return sympy_rref_rows([to_sympy([list(v)]).T for v in sub_basis], n)


def grid_nilradical(g, values=(-1, 0, 1)):
    """Span of grid points x with ad x nilpotent."""
    n = g.dim
    hits = []
    for x in itertools.product(values, repeat=n):
        if not any(x):
            continue
        a = ad_of(g, x)
        if (a ** n).is_zero_matrix:
            hits.append(sympy.Matrix(x))
    return sympy_rref_rows(hits, n)


def real_spectrum(m):
    """All roots of the characteristic polynomial real (sympy root counting)."""
    x = sympy.Symbol("x")
    p = sympy.Poly(sympy.sqf_part(m.charpoly(x).as_expr()), x)
    return p.count_roots() == p.degree()


def is_abelian(g):
    return all(v == 0 for v in np.asarray(g.c).ravel())
