import random
from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from solvshadow.exactlin import mat, zeros, identity
from solvshadow.exactlin.matrix import inverse

hypothesis.settings.register_profile("default", deadline=None, max_examples=40,
                                     suppress_health_check=[hypothesis.HealthCheck.too_slow])
hypothesis.settings.register_profile("fast", deadline=None, max_examples=8)
hypothesis.settings.load_profile("default")

F = Fraction

small = st.integers(-3, 3).map(F)
halves = st.integers(-4, 4).map(lambda k: F(k, 2))


def square(n, elems=small):
    return st.lists(elems, min_size=n * n, max_size=n * n).map(
        lambda xs: mat([xs[i * n:(i + 1) * n] for i in range(n)]))


@st.composite
def matrices(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    return draw(square(n))


@st.composite
def unimodular(draw, n):
    """Random integer matrix with determinant ±1."""
    lo, up = identity(n), identity(n)
    for i in range(n):
        for j in range(i):
            lo[i, j] = F(draw(st.integers(-1, 1)))
            up[j, i] = F(draw(st.integers(-1, 1)))
    perm = draw(st.permutations(range(n)))
    p = zeros(n, n)
    for i, j in enumerate(perm):
        p[i, j] = F(1)
    return p.dot(lo).dot(up)


def conjugate(p, a):
    return p.dot(a).dot(inverse(p))


def blockdiag(*blocks):
    n = sum(b.shape[0] for b in blocks)
    out = zeros(n, n)
    i = 0
    for b in blocks:
        k = b.shape[0]
        out[i:i + k, i:i + k] = b
        i += k
    return out


def as_list(m):
    return [[F(x) for x in row] for row in m]


@pytest.fixture
def rng():
    return random.Random(12345)


def known_decomposition(rng, n, quadratic_share=0.2):
    """Random ``(m, S, N, S_re, S_im)`` with ``m = S + N`` built from blocks.

    Real blocks are ``lam*I + shift``; complex blocks are real Jordan
    blocks for ``a ± ib`` (or ``a ± ib*sqrt2``), all conjugated by a random
    unimodular matrix, so every part is known exactly in advance.
    """
    s_re, s_im, nil = zeros(n, n), zeros(n, n), zeros(n, n)
    i = 0
    while i < n:
        room = n - i
        if room >= 2 and rng.random() < 0.45:
            k = rng.randint(1, room // 2)
            a = F(rng.randint(-3, 3), rng.choice([1, 2]))
            b = F(rng.choice([-2, -1, 1, 2, 3]))
            wide = 2 if rng.random() < quadratic_share else 1
            for t in range(k):
                r = i + 2 * t
                s_re[r, r] = s_re[r + 1, r + 1] = a
                s_im[r, r + 1], s_im[r + 1, r] = -wide * b, b
                if t + 1 < k and rng.random() < 0.7:
                    nil[r, r + 2] = nil[r + 1, r + 3] = F(1)
            i += 2 * k
        else:
            k = rng.randint(1, room)
            lam = F(rng.randint(-3, 3), rng.choice([1, 1, 2]))
            for t in range(k):
                s_re[i + t, i + t] = lam
                if t + 1 < k and rng.random() < 0.7:
                    nil[i + t, i + t + 1] = F(1)
            i += k
    p = _unimodular(rng, n)
    q = inverse(p)
    c = lambda a: p.dot(a).dot(q)
    s = s_re + s_im
    return c(s + nil), c(s), c(nil), c(s_re), c(s_im)


def _unimodular(rng, n):
    lo, up = identity(n), identity(n)
    for i in range(n):
        for j in range(i):
            lo[i, j] = F(rng.randint(-1, 1))
            up[j, i] = F(rng.randint(-1, 1))
    return lo.dot(up)
