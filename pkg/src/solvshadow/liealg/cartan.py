"""Cartan subalgebras as Fitting null components of generic elements."""
import random

import numpy as np

from ..errors import NotACartan
from ..exactlin.matrix import kernel_basis, zeros
from .algebra import Subspace, ad, subalgebra, is_nilpotent, normalizer
from .weights import nilradical


def fitting_null(g, x):
    """``ker (ad x)^n``."""
    a = ad(g, x)
    return Subspace.span(g, kernel_basis(np.linalg.matrix_power(a, g.dim)))


def check_cartan(g, h):
    """Raise NotACartan unless h is nilpotent, self-normalizing and h + n = g."""
    key = tuple(tuple(v) for v in h.basis)
    done = g._cache.setdefault("cartan_ok", set())
    if key in done:
        return
    if not h.is_subalgebra:
        raise NotACartan("not a subalgebra")
    if not is_nilpotent(subalgebra(g, h)):
        raise NotACartan("not nilpotent")
    if normalizer(g, h).dim != h.dim:
        raise NotACartan("not self-normalizing")
    if Subspace.span(g, list(h.basis) + list(nilradical(g).basis)).dim != g.dim:
        raise NotACartan("h + nilradical is not all of g")
    done.add(key)


def cartan_subalgebra(g, seed=0, retries=50):
    """A Cartan subalgebra from a seeded random element.

    Elements have small integer coordinates; a non-regular draw is
    rejected by the checks and the next draw is tried.
    """
    rng = random.Random(seed)
    for _ in range(retries):
        x = zeros(g.dim)
        for i in range(g.dim):
            x[i] = x[i] + rng.randint(-3, 3)
        h = fitting_null(g, x)
        try:
            check_cartan(g, h)
        except NotACartan:
            continue
        return h
    raise NotACartan(f"no Cartan subalgebra found in {retries} draws")
