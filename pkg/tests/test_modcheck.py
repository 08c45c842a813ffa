import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from solvshadow import catalog as cat
from solvshadow.errors import NotClosed, NotADerivation
from solvshadow.exactlin import mat, zeros
from solvshadow.liealg import InnerProduct, Subspace, change_basis, orthogonal_derivations
from solvshadow.modcheck import (
    apply_modification, is_normal_modification, check_mutual_bracket,
    check_transitivity_analogue, random_modification,
)
from solvshadow.shadow import shadow, fingerprint

J = mat([[0, -1, 0], [1, 0, 0], [0, 0, 0]])  # e1 -> e2, e2 -> -e1


def e2_modification():
    s = cat.abelian(3)
    return apply_modification(s, InnerProduct.standard(3), [J], mat([[0, 0, 1]]))


def vecs(g, *rows):
    return [np.array([int(x) for x in r], dtype=object) for r in rows]


def test_zero_phi_is_identity():
    s = cat.heisenberg3()
    (d,) = orthogonal_derivations(s, InnerProduct.standard(3))
    m = apply_modification(s, InnerProduct.standard(3), [d], zeros(1, 3))
    assert m.r == m.s_sub
    assert is_normal_modification(m)


def test_e2_from_abelian():
    m = e2_modification()
    r = m.algebra()
    # relabel (e1, e2, e3) -> (X, Y, T); compare with [T,X] = Y, [T,Y] = -X
    p = mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    t = change_basis(r, p)
    assert np.array_equal(t.c, cat.euclidean2().c)
    assert is_normal_modification(m)


def test_broken_phi_not_closed():
    with pytest.raises(NotClosed) as info:
        apply_modification(cat.abelian(3), InnerProduct.standard(3), [J], mat([[1, 0, 0]]))
    assert info.value.pair == (0, 1)


def test_torus_must_be_derivation():
    # rotating X into Z does not respect [X, Y] = Z
    with pytest.raises(NotADerivation):
        apply_modification(cat.heisenberg3(), InnerProduct.standard(3),
                           [mat([[0, 0, -1], [0, 0, 0], [1, 0, 0]])], mat([[0, 0, 0]]))


def test_mutual_bracket_examples():
    m = e2_modification()
    g = m.ambient
    assert check_mutual_bracket(g, m.r, m.r)
    assert check_mutual_bracket(g, m.s_sub, m.r)
    inter = [v for v in m.r.basis if m.s_sub.contains(v)]
    assert Subspace.span(g, inter) == Subspace.span(g, vecs(g, "1000", "0100"))
    s1 = Subspace.span(g, vecs(g, "1000"))
    r1 = Subspace.span(g, vecs(g, "0101"))
    assert not check_mutual_bracket(g, s1, r1)


def test_transitivity_examples():
    m = e2_modification()
    g = m.ambient
    assert check_transitivity_analogue(g, Subspace.zero(g), Subspace.whole(g))
    l = Subspace.span(g, vecs(g, "0001"))
    assert check_transitivity_analogue(g, l, m.r)
    assert not check_transitivity_analogue(g, l, Subspace.span(g, vecs(g, "1000", "0100")))


def test_random_modification_without_torus():
    m = random_modification(cat.affine(), seed=3)
    assert m.t == [] and m.r.dim == 2


def test_random_modification_abelian3():
    m = random_modification(cat.abelian(3), seed=1)
    assert m is not None and m.r.dim == 3 and m.t


def test_random_modification_deterministic():
    a = random_modification(cat.heisenberg3(), seed=11)
    b = random_modification(cat.heisenberg3(), seed=11)
    assert np.array_equal(a.phi, b.phi)
    assert all(np.array_equal(x, y) for x, y in zip(a.t, b.t))


bases = st.sampled_from(cat.completely_solvable_bases())


@settings(max_examples=40)
@given(bases, st.integers(0, 10 ** 6))
def test_random_modifications_are_normal(s, seed):
    m = random_modification(s, seed=seed)
    assert m is not None
    assert is_normal_modification(m)
    assert check_mutual_bracket(m.ambient, m.s_sub, m.r)


@settings(max_examples=20)
@given(bases, st.integers(0, 10 ** 6))
def test_round_trip_shadow(s, seed):
    m = random_modification(s, seed=seed)
    assert fingerprint(shadow(m.algebra()).s_algebra()) == fingerprint(s)
