"""Modifications r = (id + φ)s inside s ⋊ t, and the checks run on them."""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import NotClosed, NotADerivation, InvariantViolation
from .exactlin.matrix import (
    zeros, identity, is_zero, commutator, span_basis, rref, inverse, rank,
    kernel_basis, flatten, demote_matrix,
)
from .liealg.algebra import (
    LieAlgebra, InnerProduct, Subspace, bracket, is_derivation, semidirect_sum,
    orthogonal_derivations, bracket_span,
)
from .liealg.weights import is_completely_solvable


@dataclass(eq=False)
class Modification:
    s: LieAlgebra
    ip: InnerProduct
    t: list
    phi: np.ndarray  # len(t) x dim s: coordinates of φ(e_j) in the basis t
    ambient: LieAlgebra
    r: Subspace

    def lift(self, x):
        """(id + φ)x as an ambient vector."""
        x = np.asarray(x, dtype=object)
        return demote_matrix(np.concatenate([x, self.phi.dot(x)])) if len(self.t) else x

    @property
    def s_sub(self):
        return Subspace.span(self.ambient, [self.ambient.basis_vector(i)
                                            for i in range(self.s.dim)])

    def algebra(self, name=None):
        """Structure tensor of r in the basis (id + φ)e_i."""
        n = self.s.dim
        c = np.full((n, n, n), Fraction(0), dtype=object)
        for i in range(n):
            for j in range(i + 1, n):
                z = bracket(self.ambient, self.lift(self.s.basis_vector(i)),
                            self.lift(self.s.basis_vector(j)))
                for k in range(n):
                    c[i, j, k] = z[k]
                    c[j, i, k] = -z[k]
        return LieAlgebra(c, self.s.labels, name or f"mod({self.s.name})")


def _is_skew(d, ip):
    q = ip.matrix
    return is_zero(q.dot(d) + d.T.dot(q))


def apply_modification(s, ip, t, phi):
    """Validate the data and return the Modification, or raise NotClosed."""
    n = s.dim
    t = [demote_matrix(d) for d in t]
    phi = demote_matrix(np.asarray(phi, dtype=object).reshape(len(t), n)) if t else zeros(0, n)
    for d in t:
        if not is_derivation(s, d):
            raise NotADerivation("torus element is not a derivation of s")
        if not _is_skew(d, ip):
            raise ValueError("torus element is not skew for the inner product")
    for i, a in enumerate(t):
        for b in t[i + 1:]:
            if not is_zero(commutator(a, b)):
                raise ValueError("torus is not abelian")
    if not is_completely_solvable(s):
        raise ValueError("base algebra is not completely solvable")
    amb = semidirect_sum(s, t, k_labels=[f"J{a + 1}" for a in range(len(t))]).algebra
    m = Modification(s, ip, t, phi, amb, None)
    lifts = [m.lift(s.basis_vector(i)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            z = bracket(amb, lifts[i], lifts[j])
            if len(t) and not is_zero(z[n:] - phi.dot(z[:n])):
                raise NotClosed(i, j, z)
    m.r = Subspace.span(amb, lifts)
    if m.r.dim != n or not m.r.is_subalgebra:
        raise InvariantViolation("modified subspace is not an n-dim subalgebra")
    return m


def is_normal_modification(m):
    """φ annihilates [s, s]."""
    if not m.t:
        return True
    return all(is_zero(m.phi.dot(v)) for v in bracket_span(m.s, *([[m.s.basis_vector(i)
               for i in range(m.s.dim)]] * 2)))


def check_mutual_bracket(g, s, r):
    """[s, r] ⊆ s ∩ r on basis pairs."""
    for x in s.basis:
        for y in r.basis:
            z = bracket(g, x, y)
            if not (s.contains(z) and r.contains(z)):
                return False
    return True


def check_transitivity_analogue(g, l, r2):
    vecs = list(l.basis) + list(r2.basis)
    return (rank(np.array(vecs, dtype=object)) if vecs else 0) == g.dim


# --- random instances --------------------------------------------------------

_STEPS = (Fraction(1), Fraction(1, 2))
ATTEMPTS = 500


def _entry(rng):
    return rng.randint(-2, 2) * rng.choice(_STEPS)


def _rand_combo(rng, mats, n):
    out = zeros(n, n)
    for d in mats:
        out = out + rng.randint(-2, 2) * d
    return out


def _centralizer(d, mats, n):
    """Elements of span(mats) commuting with d."""
    if not mats:
        return []
    cols = np.array([list(flatten(commutator(d, b))) for b in mats], dtype=object).T
    out = []
    for c in kernel_basis(cols):
        out.append(sum((x * b for x, b in zip(c, mats)), zeros(n, n)))
    return out


def _sample_torus(rng, ders, n):
    while True:
        d1 = _rand_combo(rng, ders, n)
        if not is_zero(d1):
            break
    t = [d1]
    if rng.random() < 0.5:
        cent = _centralizer(d1, ders, n)
        d2 = _rand_combo(rng, cent, n)
        if rank(np.array([flatten(d1), flatten(d2)], dtype=object)) == 2:
            t.append(d2)
    return [demote_matrix(d) for d in t]


def _annihilating(rng, vanish, m, n):
    """Random m x n matrix vanishing on span(vanish)."""
    w = span_basis(vanish) if vanish else []
    comp = [j for j in range(n) if j not in (rref(np.array(w, dtype=object))[1] if w else [])]
    basis = list(w) + [_unit(n, j) for j in comp]
    values = zeros(m, n)
    for col in range(len(w), n):
        for row in range(m):
            values[row, col] = _entry(rng)
    return demote_matrix(values.dot(inverse(np.array(basis, dtype=object).T)))


def _unit(n, j):
    v = zeros(n)
    v[j] = Fraction(1)
    return v


def random_modification(s, ip=None, seed=0):
    """A seeded valid Modification of ``s``, or None when the budget runs out.

    Candidates for φ come in four kinds, drawn at random: unconstrained
    entries, maps vanishing on [s,s], maps vanishing on t(s), and maps
    vanishing on both.  Only the last kind is normal by construction; the
    closure check is the only filter applied to the others.
    """
    ip = ip or InnerProduct.standard(s.dim)
    n = s.dim
    ders = orthogonal_derivations(s, ip)
    if not ders:
        return apply_modification(s, ip, [], zeros(0, n))
    rng = random.Random(seed)
    t = _sample_torus(rng, ders, n)
    e = [s.basis_vector(i) for i in range(n)]
    derived = bracket_span(s, e, e)
    images = span_basis([d.dot(v) for d in t for v in e])
    for _ in range(ATTEMPTS):
        kind = rng.randrange(4)
        if kind == 0:
            phi = zeros(len(t), n)
            for a in range(len(t)):
                for j in range(n):
                    phi[a, j] = _entry(rng)
        else:
            vanish = []
            if kind in (1, 3):
                vanish += derived
            if kind in (2, 3):
                vanish += images
            phi = _annihilating(rng, vanish, len(t), n)
        try:
            return apply_modification(s, ip, t, phi)
        except NotClosed:
            continue
    return None
