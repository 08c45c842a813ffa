"""Built-in algebras and seeded random solvable algebras."""
import random
from fractions import Fraction

from .exactlin.matrix import mat, zeros, identity, inverse
from .liealg.algebra import LieAlgebra, direct_sum, change_basis

F = Fraction


def _lie(n, brackets, labels, name):
    return LieAlgebra.from_brackets(n, brackets, labels=labels, name=name)


def abelian(n):
    return _lie(n, {}, tuple(f"e{i + 1}" for i in range(n)), f"abelian{n}")


def heisenberg3():
    return _lie(3, {(0, 1): {2: 1}}, ("X", "Y", "Z"), "heisenberg3")


def h3_plus_line():
    return _lie(4, {(0, 1): {2: 1}}, ("X", "Y", "Z", "W"), "h3xR")


def affine():
    return _lie(2, {(0, 1): {1: 1}}, ("X", "Y"), "affine")


def euclidean2():
    """ẽ(2): [T,X] = Y, [T,Y] = -X."""
    return _lie(3, {(0, 1): {2: 1}, (0, 2): {1: -1}}, ("T", "X", "Y"), "e2tilde")


def oscillator():
    return _lie(4, {(0, 1): {2: 1}, (0, 2): {1: -1}, (1, 2): {3: 1}},
                ("T", "X", "Y", "Z"), "oscillator")


def blockdiag5():
    """span{T} ⋉ R^4, ad T = blockdiag([[1,-1],[1,1]], [[-1,-1],[1,-1]])."""
    return semidirect_line(mat([[1, -1, 0, 0], [1, 1, 0, 0],
                                [0, 0, -1, -1], [0, 0, 1, -1]]), "blockdiag5")


def diag_pm1():
    return semidirect_line(mat([[1, 0], [0, -1]]), "diag1m1")


def semidirect_line(a, name="line", labels=None):
    """span{T} ⋉ R^m with ad T|R^m = a (T is basis vector 0)."""
    m = a.shape[0]
    br = {}
    for j in range(m):
        out = {k + 1: a[k, j] for k in range(m) if a[k, j] != 0}
        if out:
            br[(0, j + 1)] = out
    labels = labels or ("T",) + tuple(f"V{j + 1}" for j in range(m))
    return _lie(m + 1, br, labels, name)


def catalog():
    """Ordered list of the built-in algebras."""
    out = [abelian(n) for n in range(1, 5)]
    out += [heisenberg3(), h3_plus_line(), affine(), euclidean2(), oscillator(),
            blockdiag5(), diag_pm1()]
    out.append(direct_sum(euclidean2(), euclidean2(), "e2tilde+e2tilde"))
    out.append(direct_sum(oscillator(), affine(), "oscillator+affine"))
    out.append(direct_sum(heisenberg3(), euclidean2(), "h3+e2tilde"))
    return out


def catalog_by_name(name):
    for g in catalog():
        if g.name == name:
            return g
    raise KeyError(name)


def completely_solvable_bases():
    """Catalog entries usable as modification bases (completely solvable)."""
    from .liealg.weights import is_completely_solvable
    return [g for g in catalog() if is_completely_solvable(g)]


# --- random solvable algebras -----------------------------------------------

def _small(rng, lo=-2, hi=2, nonzero=False):
    while True:
        v = F(rng.randint(lo, hi))
        if rng.random() < 0.25:
            v = v / 2
        if v != 0 or not nonzero:
            return v


def random_unimodular(rng, n):
    """Product of random unit lower and upper triangular integer matrices."""
    lo, up = identity(n), identity(n)
    for i in range(n):
        for j in range(i):
            lo[i, j] = F(rng.randint(-1, 1))
            up[j, i] = F(rng.randint(-1, 1))
    perm = list(range(n))
    rng.shuffle(perm)
    p = zeros(n, n)
    for i, j in enumerate(perm):
        p[i, j] = F(1)
    return p.dot(lo).dot(up)


def _blocks(rng, m, quadratic=False):
    """Block-diagonal m x m matrix with designed spectrum."""
    a = zeros(m, m)
    i = 0
    while i < m:
        kind = rng.choice(["real", "rot", "jordan"]) if m - i >= 2 else "real"
        if kind == "real":
            a[i, i] = _small(rng)
            i += 1
        elif kind == "rot":
            x, y = _small(rng), _small(rng, nonzero=True)
            if quadratic:
                # eigenvalues x ± i*y*sqrt(2)
                a[i, i], a[i, i + 1], a[i + 1, i], a[i + 1, i + 1] = x, -2 * y, y, x
            else:
                a[i, i], a[i, i + 1], a[i + 1, i], a[i + 1, i + 1] = x, -y, y, x
            i += 2
        else:
            x = _small(rng)
            a[i, i], a[i, i + 1], a[i + 1, i + 1] = x, F(1), x
            i += 2
    return a


def _conj(rng, a):
    p = random_unimodular(rng, a.shape[0])
    return p.dot(a).dot(inverse(p))


def _line_type(rng, dim, quadratic=False):
    a = _conj(rng, _blocks(rng, dim - 1, quadratic))
    return semidirect_line(a)


def _torus2_type(rng, dim):
    """span{T1, T2} ⋉ R^m with commuting block actions."""
    m = dim - 2
    b1 = _blocks(rng, m)
    # the second action is a polynomial in the first, so the two commute
    b2 = b1.dot(b1) * _small(rng) + identity(m) * _small(rng)
    p = random_unimodular(rng, m)
    a1, a2 = p.dot(b1).dot(inverse(p)), p.dot(b2).dot(inverse(p))
    br = {}
    for t, a in ((0, a1), (1, a2)):
        for j in range(m):
            out = {k + 2: a[k, j] for k in range(m) if a[k, j] != 0}
            if out:
                br[(t, j + 2)] = out
    return _lie(dim, br, ("T1", "T2") + tuple(f"V{j + 1}" for j in range(m)), "torus2")


def _heisenberg_type(rng, dim):
    """span{T} ⋉ (h3 ⊕ R^(dim-4)), T rotating-scaling X, Y and scaling Z by the trace."""
    x, y = _small(rng), _small(rng)
    c = _small(rng)
    br = {(1, 2): {3: F(1)}}
    if x or y:
        br[(0, 1)] = {k: v for k, v in ((1, x), (2, y)) if v}
        br[(0, 2)] = {k: v for k, v in ((1, -y), (2, x)) if v}
    if x:
        br[(0, 3)] = {3: 2 * x}
    if dim == 5 and c:
        br[(0, 4)] = {4: c}
    labels = ("T", "X", "Y", "Z", "W")[:dim]
    return _lie(dim, br, labels, "heis-ext")


def random_solvable(seed, max_dim=5):
    """Seeded random solvable algebra with rational structure constants.

    Families: one-element extensions of abelian ideals with designed
    spectra, two commuting extensions, extensions of the Heisenberg algebra,
    and direct sums; finally a random change of basis.  About one in ten
    uses a real-quadratic rotation so that extensions beyond Q(i) occur.
    """
    rng = random.Random(seed)
    dim = rng.randint(2, max_dim)
    fam = rng.choice(["line", "line", "torus2", "heis", "sum", "quad"])
    if fam == "torus2" and dim >= 3:
        g = _torus2_type(rng, dim)
    elif fam == "heis" and dim >= 4:
        g = _heisenberg_type(rng, dim)
    elif fam == "sum" and dim >= 4:
        d1 = rng.randint(2, dim - 2)
        g = direct_sum(_line_type(rng, d1), _line_type(rng, dim - d1))
    elif fam == "quad" and dim >= 3 and rng.random() < 0.6:
        g = _line_type(rng, dim, quadratic=True)
    else:
        g = _line_type(rng, dim)
    g = change_basis(g, random_unimodular(rng, dim), name=f"random{seed}")
    return g


def random_basis_change(g, seed):
    rng = random.Random(seed)
    return change_basis(g, random_unimodular(rng, g.dim), name=f"{g.name}@{seed}")
