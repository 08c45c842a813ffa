"""Basis-independent invariants of a solvable Lie algebra."""
from collections import Counter
from dataclasses import dataclass, asdict
from itertools import combinations

import numpy as np

from ..errors import NonSolvableInput
from ..exactlin.matrix import rank, is_zero
from ..exactlin.numberfield import sign, scalar_key, scalar_str, demote
from ..liealg.algebra import (
    derived_series, lower_central_series, center, killing_form, is_unimodular,
    is_solvable,
)
from ..liealg.weights import weight_data, nilradical, is_completely_solvable


@dataclass(frozen=True)
class Fingerprint:
    dimension: int
    derived_profile: tuple
    lower_central_profile: tuple
    nilradical_dim: int
    center_dim: int
    killing_rank: int
    killing_signature: tuple
    weight_pattern: tuple
    unimodular: bool
    completely_solvable: bool

    def as_dict(self):
        return asdict(self)


def inertia(b):
    """(positive, negative, zero) counts of a real symmetric matrix."""
    a = np.array(b, dtype=object, copy=True)
    n = a.shape[0]
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i, i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish: mix in an off-diagonal pair
            pair = next(((i, j) for i, j in combinations(active, 2) if a[i, j] != 0), None)
            if pair is None:
                break
            i, j = pair
            a[i, :] = a[i, :] + a[j, :]
            a[:, i] = a[:, i] + a[:, j]
            continue
        d = a[piv, piv]
        pos, neg = (pos + 1, neg) if sign(d) > 0 else (pos, neg + 1)
        active.remove(piv)
        for i in active:
            if a[i, piv] != 0:
                f = a[i, piv] / d
                a[i, :] = a[i, :] - f * a[piv, :]
                a[:, i] = a[:, i] - f * a[:, piv]
    return pos, neg, n - pos - neg


def _weight_pattern(g):
    """Isomorphism invariants of the weight multiset.

    Weights are linear functionals, so a change of basis acts on all of
    them by the same invertible map.  Multiplicities, the rank of their
    span, proportionality constants and additive relations survive.
    """
    ws = [tuple(w) for w in weight_data(g).weights]
    mult = Counter(tuple(scalar_key(x) for x in w) for w in ws)
    distinct = {}
    for w in ws:
        distinct.setdefault(tuple(scalar_key(x) for x in w), w)
    vecs = list(distinct.values())
    nonzero = [w for w in vecs if any(x != 0 for x in w)]
    span_rank = rank(np.array([list(w) for w in nonzero], dtype=object)) if nonzero else 0
    ratios = []
    for a, b in combinations(nonzero, 2):
        c = _ratio(a, b)
        if c is not None:
            pair = sorted([scalar_str(c), scalar_str(1 / c)])
            ratios.append("|".join(pair))
    keyed = {tuple(scalar_key(x) for x in w): w for w in vecs}
    additive = 0
    for a, b in combinations(nonzero, 2):
        s = tuple(scalar_key(demote(x + y)) for x, y in zip(a, b))
        if s in keyed:
            additive += 1
    zero_mult = mult.get(tuple(scalar_key(demote(0 * x)) for x in ws[0]), 0) if ws else 0
    return (
        ("multiplicities", tuple(sorted(mult.values()))),
        ("zero_multiplicity", zero_mult),
        ("span_rank", span_rank),
        ("ratios", tuple(sorted(ratios))),
        ("additive_pairs", additive),
    )


def _ratio(a, b):
    """c with a = c * b, or None."""
    p = next(i for i, x in enumerate(b) if x != 0)
    c = a[p] / b[p]
    if all(x == c * y for x, y in zip(a, b)):
        return demote(c)
    return None


def fingerprint(g):
    if not is_solvable(g):
        raise NonSolvableInput("fingerprints are defined for solvable algebras")
    b = killing_form(g)
    return Fingerprint(
        dimension=g.dim,
        derived_profile=tuple(s.dim for s in derived_series(g)),
        lower_central_profile=tuple(s.dim for s in lower_central_series(g)),
        nilradical_dim=nilradical(g).dim,
        center_dim=center(g).dim,
        killing_rank=rank(b) if g.dim else 0,
        killing_signature=inertia(b)[:2],
        weight_pattern=_weight_pattern(g),
        unimodular=is_unimodular(g),
        completely_solvable=is_completely_solvable(g),
    )
