"""The completely solvable shadow s of a solvable algebra r, built inside r ⋊ k."""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..errors import DegeneratePairing, InvariantViolation, NonSolvableInput
from ..exactlin.jordan import jordan_chevalley, split_real_imag
from ..exactlin.matrix import (
    zeros, is_zero, kernel_basis, span_basis, coords_in_basis, commutator,
    flatten, demote_matrix, purely_imaginary_spectrum, rank, intersect_spans,
)
from ..liealg.algebra import (
    LieAlgebra, Subspace, ad, bracket, is_solvable, is_derivation, semidirect_sum,
    subalgebra, killing_form, is_unimodular,
)
from ..liealg.cartan import cartan_subalgebra, check_cartan
from ..liealg.weights import (
    nilradical, is_completely_solvable, max_completely_solvable_ideal,
)


def compact_part_map(r, h):
    """θ(X_i) for every basis vector X_i of r, as a list of matrices.

    On a basis of h, θ(H) is the imaginary-spectrum part of the semisimple
    part of ad H; θ is zero on a complement of h ∩ n inside the nilradical n.
    """
    check_cartan(r, h)
    n = r.dim
    nil = nilradical(r)
    hn = intersect_spans(h.basis, nil.basis, n)
    comp = _complement(nil.basis, hn)
    basis = list(h.basis) + comp
    if len(basis) != n or (n and rank(np.array(basis, dtype=object)) != n):
        raise InvariantViolation("h and the nilradical complement do not span r")
    on_h = []
    for hv in h.basis:
        s = jordan_chevalley(ad(r, hv)).semisimple
        _, s_im = split_real_imag(s)
        on_h.append(s_im)
    theta = []
    for i in range(n):
        c = coords_in_basis(basis, r.basis_vector(i))
        t = zeros(n, n)
        for a, m in zip(c[:h.dim], on_h):
            if a != 0:
                t = t + a * m
        theta.append(demote_matrix(t))
    _check_theta(r, theta, nil)
    return theta


def _complement(big, small):
    """Vectors from ``big`` completing a basis of ``small`` to one of span(big)."""
    out = list(small)
    extra = []
    for v in big:
        if rank(np.array(out + [v], dtype=object)) > len(out):
            out.append(v)
            extra.append(v)
    return extra


def _check_theta(r, theta, nil):
    for t in theta:
        if not is_derivation(r, t):
            raise InvariantViolation("θ(X) is not a derivation")
        if not purely_imaginary_spectrum(t):
            raise InvariantViolation("θ(X) has non-imaginary spectrum")
    for i, a in enumerate(theta):
        for b in theta[i + 1:]:
            if not is_zero(commutator(a, b)):
                raise InvariantViolation("θ outputs do not commute")
    for v in nil.basis:
        t = sum((c * m for c, m in zip(v, theta)), zeros(r.dim, r.dim))
        if not is_zero(t):
            raise InvariantViolation("θ does not vanish on the nilradical")


@dataclass(eq=False)
class ShadowResult:
    r: object
    h: Subspace
    theta: list
    k: list
    ambient: object
    s: Subspace

    @property
    def k_subspace(self):
        n = self.r.dim
        return Subspace.span(self.ambient, [self.ambient.basis_vector(n + a)
                                            for a in range(len(self.k))])

    def correspond(self, x):
        """X ↦ X − θ(X) as a vector of the ambient algebra."""
        n = self.r.dim
        t = sum((c * m for c, m in zip(x, self.theta)), zeros(n, n))
        kc = _k_coords(self.k, t)
        return demote_matrix(np.concatenate([np.asarray(x, dtype=object),
                                             -np.asarray(kc, dtype=object)]))

    def s_in_r_basis(self):
        """s in the basis X_i − θ(X_i), labelled like r (equals r when θ = 0)."""
        n = self.r.dim
        vecs = [self.correspond(self.r.basis_vector(i)) for i in range(n)]
        c = np.full((n, n, n), Fraction(0), dtype=object)
        for i in range(n):
            for j in range(i + 1, n):
                coords = coords_in_basis(vecs, bracket(self.ambient, vecs[i], vecs[j]))
                if coords is None:
                    raise InvariantViolation("s is not closed under the bracket")
                for k in range(n):
                    c[i, j, k] = coords[k]
                    c[j, i, k] = -coords[k]
        return LieAlgebra(c, self.r.labels, self.r.name)

    def s_algebra(self):
        alg = self.ambient._cache.get("s_algebra")
        if alg is None:
            alg = subalgebra(self.ambient, self.s)
            alg.name = f"shadow({self.r.name})"
            self.ambient._cache["s_algebra"] = alg
        return alg


def _k_coords(k, t):
    if not k:
        if not is_zero(t):
            raise InvariantViolation("θ output outside k")
        return []
    c = coords_in_basis([flatten(m) for m in k], flatten(t))
    if c is None:
        raise InvariantViolation("θ output outside k")
    return list(c)


def shadow(r, h=None, cartan_seed=0):
    """Build ShadowResult for solvable r (Cartan from ``cartan_seed`` if h is None)."""
    if not is_solvable(r):
        raise NonSolvableInput("input algebra is not solvable")
    if h is None:
        h = cartan_subalgebra(r, seed=cartan_seed)
    theta = compact_part_map(r, h)
    n = r.dim
    kflat = span_basis([flatten(t) for t in theta if not is_zero(t)])
    k = [demote_matrix(np.asarray(v, dtype=object).reshape(n, n)) for v in kflat]
    sd = semidirect_sum(r, k, k_labels=[f"K{a + 1}" for a in range(len(k))])
    res = ShadowResult(r, h, theta, k, sd.algebra, None)
    res.s = Subspace.span(sd.algebra, [res.correspond(r.basis_vector(i)) for i in range(n)])
    _check_result(res)
    return res


def _check_result(res):
    n, m = res.r.dim, len(res.k)
    if res.s.dim != n:
        raise InvariantViolation("dim s != dim r")
    vecs = list(res.s.basis) + list(res.k_subspace.basis)
    if vecs and rank(np.array(vecs, dtype=object)) != n + m:
        raise InvariantViolation("g is not s ⊕ k")
    for i, a in enumerate(res.k):
        for b in res.k[i + 1:]:
            if not is_zero(commutator(a, b)):
                raise InvariantViolation("k is not abelian")
    if not res.s.is_subalgebra:
        raise InvariantViolation("s is not a subalgebra")
    if not res.s.is_ideal:
        raise InvariantViolation("s is not an ideal of g")
    if not is_completely_solvable(res.s_algebra()):
        raise InvariantViolation("s is not completely solvable")


def shadow_via_killing(g, k):
    """{X ∈ g : B(X, Y) = 0 for all Y ∈ k} with B the Killing form of g."""
    if k.dim == 0:
        return Subspace.whole(g)
    b = killing_form(g)
    rows = np.array([list(b.dot(y)) for y in k.basis], dtype=object)
    out = Subspace.span(g, kernel_basis(rows))
    if out.dim != g.dim - k.dim:
        raise DegeneratePairing(f"Killing pairing against k is degenerate (dim {out.dim})")
    return out


@dataclass(frozen=True)
class Check:
    key: str
    name: str
    passed: bool


def verify_shadow(res):
    """Checks (a)-(g) as a list of Check records, in fixed order."""
    g, s, r = res.ambient, res.s, res.r
    n = r.dim
    sa = res.s_algebra()
    r_emb = [g.basis_vector(i) for i in range(n)]
    checks = []

    def add(key, name, fn):
        checks.append(Check(key, name, bool(fn())))

    add("a", "s is an ideal of r ⋊ k", lambda: s.is_ideal)
    add("b", "s is completely solvable", lambda: is_completely_solvable(sa))
    add("c", "s is the maximal completely solvable ideal",
        lambda: s == max_completely_solvable_ideal(g))

    def nil_in_s():
        return all(s.contains(np.concatenate([v, zeros(len(res.k))]))
                   for v in nilradical(r).basis)
    add("d", "nilradical(r) ⊆ s", nil_in_s)

    def sr_bracket():
        for x in s.basis:
            for y in r_emb:
                z = bracket(g, x, y)
                if not s.contains(z) or not all(c == 0 for c in z[n:]):
                    return False
        return True
    add("e", "[s, r] ⊆ s ∩ r", sr_bracket)
    add("f", "r unimodular ⇒ s unimodular",
        lambda: (not is_unimodular(r)) or is_unimodular(sa))

    def split():
        vecs = list(s.basis) + list(res.k_subspace.basis)
        return not vecs or rank(np.array(vecs, dtype=object)) == g.dim
    add("g", "g = s + k with s ∩ k = 0", split)
    return checks
