from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from solvshadow import catalog as cat
from solvshadow.errors import NonSolvableInput, NotACartan
from solvshadow.exactlin import is_zero, mat, purely_imaginary_spectrum, commutator
from solvshadow.exactlin.numberfield import re, scalar_key
from solvshadow.liealg import (
    LieAlgebra, Subspace, is_completely_solvable, is_unimodular, is_derivation,
    nilradical, weight_data, semidirect_sum,
)
from solvshadow.liealg.cartan import cartan_subalgebra
from solvshadow.shadow import (
    compact_part_map, shadow, shadow_via_killing, verify_shadow, fingerprint,
)

from conftest import as_list

seeds = st.integers(0, 10 ** 6)


def span(g, *idx):
    return Subspace.span(g, [g.basis_vector(i) for i in idx])


def rotation_on(n, a, b):
    m = mat([[0] * n for _ in range(n)])
    m[b, a], m[a, b] = 1, -1
    return m


# --- compact part map -----------------------------------------------------------

def test_theta_vanishes_for_completely_solvable():
    for g in (cat.heisenberg3(), cat.affine(), cat.diag_pm1()):
        theta = compact_part_map(g, cartan_subalgebra(g))
        assert all(is_zero(t) for t in theta)


def test_theta_e2():
    g = cat.euclidean2()
    theta = compact_part_map(g, span(g, 0))
    # X -> Y, Y -> -X, T -> 0
    assert as_list(theta[0]) == as_list(rotation_on(3, 1, 2))
    assert is_zero(theta[1]) and is_zero(theta[2])


def test_theta_oscillator():
    g = cat.oscillator()
    # span{T} alone is not self-normalizing (Z commutes with T); the Cartan is span{T, Z}
    with pytest.raises(NotACartan):
        compact_part_map(g, span(g, 0))
    theta = compact_part_map(g, span(g, 0, 3))
    assert as_list(theta[0]) == as_list(rotation_on(4, 1, 2))
    assert all(is_zero(theta[i]) for i in (1, 2, 3))


@settings(max_examples=20)
@given(seeds)
def test_theta_outputs_are_commuting_compact_derivations(seed):
    g = cat.random_solvable(seed)
    theta = compact_part_map(g, cartan_subalgebra(g))
    n = nilradical(g)
    for t in theta:
        assert is_derivation(g, t)
        assert purely_imaginary_spectrum(t)
        for u in theta:
            assert is_zero(commutator(t, u))
    for v in n.basis:
        assert is_zero(sum((c * t for c, t in zip(v, theta)), 0 * theta[0]))


# --- shadow ----------------------------------------------------------------------

def test_shadow_h3_is_itself():
    r = cat.heisenberg3()
    res = shadow(r)
    assert res.k == [] and res.ambient.dim == 3
    assert np.array_equal(res.s_in_r_basis().c, r.c)


def test_shadow_e2_is_abelian():
    r = cat.euclidean2()
    res = shadow(r)
    assert len(res.k) == 1
    s = res.s_algebra()
    assert s.dim == 3 and all(x == 0 for x in s.c.ravel())
    # T - theta(T), X, Y span s; [T - theta(T), X] = Y - Y = 0
    t = res.correspond(r.basis_vector(0))
    assert res.s.contains(t)
    assert res.s == Subspace.span(res.ambient, [t] + [res.ambient.basis_vector(i) for i in (1, 2)])


def test_shadow_blockdiag():
    r = cat.blockdiag5()
    res = shadow(r)
    s = res.s_in_r_basis()
    # ad T' = diag(1, 1, -1, -1) on the R^4 part
    expect = [[0] * 5] + [[0] + [x if i == j else 0 for j in range(4)]
                          for i, x in enumerate([1, 1, -1, -1])]
    assert as_list(s.c[0].T) == expect
    assert is_unimodular(r) and is_unimodular(s)


def test_shadow_rejects_non_solvable():
    sl2 = LieAlgebra.from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
    with pytest.raises(NonSolvableInput):
        shadow(sl2)


@settings(max_examples=25)
@given(seeds)
def test_shadow_invariants(seed):
    r = cat.random_solvable(seed)
    res = shadow(r)
    assert res.s.dim == r.dim
    assert is_completely_solvable(res.s_algebra())
    assert res.s.is_ideal
    for d in res.k:
        assert purely_imaginary_spectrum(d)
    if is_unimodular(r):
        assert is_unimodular(res.s_algebra())


@settings(max_examples=25)
@given(seeds)
def test_shadow_idempotent(seed):
    res = shadow(cat.random_solvable(seed))
    s = res.s_algebra()
    again = shadow(s)
    assert again.k == []
    assert np.array_equal(again.s_in_r_basis().c, s.c)


def _value_multiset(wd, transform=lambda x: x):
    return Counter(tuple(scalar_key(transform(x)) for x in w) for w in wd.weights)


@settings(max_examples=25)
@given(seeds)
def test_weight_realization(seed):
    # weights of s on X_i - theta(X_i) are the real parts of the weights of r on X_i
    r = cat.random_solvable(seed)
    s = shadow(r).s_in_r_basis()
    assert _value_multiset(weight_data(s)) == _value_multiset(weight_data(r), re)


# --- Killing orthocomplement ------------------------------------------------------

def test_killing_zero_torus():
    g = cat.heisenberg3()
    assert shadow_via_killing(g, Subspace.zero(g)).dim == 3


@pytest.mark.parametrize("builder", [cat.euclidean2, cat.oscillator, cat.blockdiag5])
def test_killing_matches_worked_examples(builder):
    res = shadow(builder())
    assert shadow_via_killing(res.ambient, res.k_subspace) == res.s


def test_killing_by_hand_e2():
    # ambient basis T, X, Y, K with K = theta(T); B(T,T) = B(K,K) = B(T,K) = -2
    res = shadow(cat.euclidean2())
    from solvshadow.liealg import killing_form
    b = killing_form(res.ambient)
    assert as_list(b) == [[-2, 0, 0, -2], [0, 0, 0, 0], [0, 0, 0, 0], [-2, 0, 0, -2]]


@settings(max_examples=25)
@given(seeds)
def test_killing_agrees_on_random(seed):
    res = shadow(cat.random_solvable(seed))
    assert shadow_via_killing(res.ambient, res.k_subspace) == res.s


# --- verification -----------------------------------------------------------------

@pytest.mark.parametrize("builder", [cat.heisenberg3, cat.euclidean2, cat.blockdiag5])
def test_verify_examples(builder):
    checks = verify_shadow(shadow(builder()))
    assert [c.key for c in checks] == list("abcdefg")
    assert all(c.passed for c in checks)


def test_verify_flags_wrong_subspace():
    res = shadow(cat.euclidean2())
    res.s = Subspace.span(res.ambient, [res.ambient.basis_vector(i) for i in range(3)])
    failed = {c.key for c in verify_shadow(res) if not c.passed}
    assert "c" in failed


# --- fingerprints -----------------------------------------------------------------

def test_fingerprint_basis_invariance_h3():
    h = cat.heisenberg3()
    assert fingerprint(h) == fingerprint(cat.random_basis_change(h, 3))


def test_fingerprint_shadow_e2_is_abelian():
    assert fingerprint(shadow(cat.euclidean2()).s_algebra()) == fingerprint(cat.abelian(3))


def test_fingerprint_oscillator_two_cartans():
    g = cat.oscillator()
    h1 = span(g, 0, 3)
    x = g.basis_vector(0) + g.basis_vector(1)
    h2 = Subspace.span(g, [x, g.basis_vector(3)])
    assert h1 != h2
    f1 = fingerprint(shadow(g, h=h1).s_algebra())
    f2 = fingerprint(shadow(g, h=h2).s_algebra())
    assert f1 == f2 == fingerprint(cat.h3_plus_line())


def test_fingerprint_separates_catalog():
    prints = [fingerprint(g) for g in cat.catalog()]
    assert len(set(prints)) == len(prints)


@settings(max_examples=25)
@given(seeds, st.integers(0, 100))
def test_fingerprint_invariant_under_basis_change(seed, k):
    g = cat.random_solvable(seed)
    assert fingerprint(g) == fingerprint(cat.random_basis_change(g, k))


def test_semidirect_of_shadow_torus_is_consistent():
    res = shadow(cat.oscillator())
    again = semidirect_sum(res.r, res.k).algebra
    assert np.array_equal(again.c, res.ambient.c)
