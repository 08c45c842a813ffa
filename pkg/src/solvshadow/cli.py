"""Command-line entry point: analyze, shadow, modcheck, catalog, fingerprint.

Exit status: 0 all checks pass, 1 a mathematical check failed, 2 bad input,
3 an internal invariant was violated.
"""
import argparse
import logging
import os
import sys
import time
from dataclasses import asdict

from .catalog import catalog, random_basis_change
from .document import (
    document_from_algebra, document_to_obj, parse_document, parse_modification,
    to_algebra, scalar_to_json, digest, modification_to_obj,
)
from .errors import (
    DegeneratePairing, DocumentSyntaxError, InvariantViolation, JacobiViolation,
    NonPositiveDefinite, NonSolvableInput, NonSymmetric, NotACartan, NotClosed,
    NotADerivation,
)
from .exactlin.numberfield import GAUSSIAN, scalar_str
from .exactlin.poly import pstr
from .liealg.algebra import (
    InnerProduct, Subspace, center, derivations, is_nilpotent, is_solvable,
    is_unimodular, killing_form, subalgebra,
)
from .liealg.cartan import cartan_subalgebra
from .liealg.weights import (
    is_completely_solvable, max_completely_solvable_ideal, nilradical, weight_data,
)
from .modcheck import (
    apply_modification, check_mutual_bracket, check_transitivity_analogue,
    is_normal_modification, random_modification,
)
from .report import Report
from .shadow import fingerprint, shadow, shadow_via_killing, verify_shadow

log = logging.getLogger("solvshadow")

INPUT_ERRORS = (DocumentSyntaxError, JacobiViolation, NonSymmetric, NonPositiveDefinite,
                OSError, NotADerivation)
MATH_ERRORS = (NonSolvableInput, NotClosed, DegeneratePairing, NotACartan)


# --- small serializers --------------------------------------------------------

def subspace_obj(sub):
    return [[scalar_to_json(x) for x in v] for v in sub.basis]


def matrix_obj(m):
    return [[scalar_to_json(x) for x in row] for row in m]


def field_name(f):
    return "Q" if f is None else f"Q[x]/({pstr(f.minpoly)}), root {f.root_index}"


def fingerprint_obj(fp):
    return _jsonable(asdict(fp))


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def field_allowed(policy, f):
    if policy == "rational":
        return f is None
    if policy == "gaussian":
        return f is None or f == GAUSSIAN
    return True


def _field_check(rep, policy, f, what):
    if policy in ("rational", "gaussian"):
        rep.check(f"{what} computable over the {policy} field", field_allowed(policy, f),
                  field_name(f))


# --- commands -------------------------------------------------------------------

def run_analyze(g, rep, opts):
    rep.objects["dimension"] = g.dim
    solvable = is_solvable(g)
    rep.objects["solvable"] = solvable
    rep.check("input is solvable", solvable)
    if not solvable:
        return rep
    wd = weight_data(g)
    _field_check(rep, opts.field, wd.field, "weights")
    cs = is_completely_solvable(g)
    uni = is_unimodular(g)
    if not uni:
        rep.warn("algebra is NOT unimodular; the group-level theorems assume unimodularity")
    nil = nilradical(g)
    mcs = max_completely_solvable_ideal(g)
    h = cartan_subalgebra(g, seed=opts.seed)
    rep.objects.update({
        "nilpotent": is_nilpotent(g),
        "completely_solvable": cs,
        "unimodular": uni,
        "nilradical": subspace_obj(nil),
        "nilradical_dim": nil.dim,
        "max_completely_solvable_ideal": subspace_obj(mcs),
        "max_completely_solvable_ideal_dim": mcs.dim,
        "cartan_subalgebra": subspace_obj(h),
        "killing_form": matrix_obj(killing_form(g)),
        "derivation_algebra_dim": len(derivations(g)),
        "center_dim": center(g).dim,
        "weight_field": field_name(wd.field),
        "weights": [[scalar_str(x) for x in w] for w in wd.weights],
    })
    rep.check("nilradical is a nilpotent ideal",
              nil.is_ideal and is_nilpotent(subalgebra(g, nil)))
    rep.check("max completely solvable ideal is a completely solvable ideal containing the nilradical",
              mcs.is_ideal and is_completely_solvable(subalgebra(g, mcs))
              and mcs.contains_subspace(nil))
    return rep


def _shadow_doc(res):
    s = res.s_in_r_basis()
    return document_to_obj(document_from_algebra(s, name=res.r.name))


def run_shadow(g, rep, opts):
    if not is_solvable(g):
        raise NonSolvableInput("input algebra is not solvable")
    if not is_unimodular(g):
        rep.warn("algebra is NOT unimodular; the construction still runs")
    t0 = time.perf_counter()
    res = shadow(g, cartan_seed=opts.seed)
    rep.timing["shadow"] = time.perf_counter() - t0
    for c in verify_shadow(res):
        rep.check(f"({c.key}) {c.name}", c.passed)
    _field_check(rep, opts.field, res.ambient.field, "shadow")
    if opts.cross_check:
        try:
            sk = shadow_via_killing(res.ambient, res.k_subspace)
            rep.check("Killing orthocomplement of k equals s", sk == res.s)
        except DegeneratePairing as e:
            rep.check("Killing orthocomplement of k equals s", False, str(e))
    fp = fingerprint(res.s_algebra())
    if opts.cartan_retries:
        seen = [tuple(tuple(scalar_to_json(x) for x in v) for v in res.h.basis)]
        agree = True
        for seed in range(opts.seed + 1, opts.seed + 1 + opts.cartan_retries):
            other = shadow(g, cartan_seed=seed)
            key = tuple(tuple(scalar_to_json(x) for x in v) for v in other.h.basis)
            if key not in seen:
                seen.append(key)
            agree = agree and fingerprint(other.s_algebra()) == fp
        rep.check(f"shadow fingerprint stable over {opts.cartan_retries} further Cartan draws",
                  agree, {"distinct_cartans": len(seen)})
    rep.objects.update({
        "cartan_subalgebra": subspace_obj(res.h),
        "torus_dim": len(res.k),
        "torus": [matrix_obj(d) for d in res.k],
        "shadow": _shadow_doc(res),
        "shadow_fingerprint": fingerprint_obj(fp),
    })
    return rep


def run_modcheck(g, ip, mod_text, rep, opts):
    mats, phi, ip_mod = parse_modification(mod_text, g.dim)
    ip = ip_mod or ip or InnerProduct.standard(g.dim)
    if not is_completely_solvable(g):
        raise NonSolvableInput("modification base must be completely solvable")
    try:
        m = apply_modification(g, ip, mats, phi)
    except NotClosed as e:
        rep.check("(id + φ)s is closed under the bracket", False,
                  {"pair": list(e.pair), "labels": [g.labels[e.pair[0]], g.labels[e.pair[1]]],
                   "bracket": [scalar_to_json(x) for x in e.bracket]})
        return rep
    rep.check("(id + φ)s is closed under the bracket", True)
    rep.check("modification is normal: φ kills [s, s]", is_normal_modification(m))
    rep.check("[s, r] ⊆ s ∩ r in s ⋊ t", check_mutual_bracket(m.ambient, m.s_sub, m.r))
    t_sub = Subspace.span(m.ambient, [m.ambient.basis_vector(g.dim + a) for a in range(len(m.t))])
    rep.check("s ⋊ t = t + r", check_transitivity_analogue(m.ambient, t_sub, m.r))
    r_alg = m.algebra(name=f"{g.name}-modified")
    same = fingerprint(shadow(r_alg, cartan_seed=opts.seed).s_algebra()) == fingerprint(g)
    rep.check("shadow of r has the fingerprint of s", same)
    rep.objects["modified_algebra"] = document_to_obj(document_from_algebra(r_alg))
    rep.objects["completely_solvable_r"] = is_completely_solvable(r_alg)
    return rep


def run_fingerprint(g, rep, opts):
    rep.objects["fingerprint"] = fingerprint_obj(fingerprint(g))
    return rep


CATALOG_CARTAN_SEEDS = 3
CATALOG_CONJUGATIONS = 2
CATALOG_MODIFICATIONS = 3


def run_catalog(rep, opts):
    entries = [g for g in catalog() if opts.filter in g.name]
    if not entries:
        rep.warn(f"no catalog algebra matches filter {opts.filter!r}")
    summary = []
    for g in entries:
        t0 = time.perf_counter()
        name = g.name
        res = shadow(g, cartan_seed=opts.seed)
        for c in verify_shadow(res):
            rep.check(f"{name}: ({c.key}) {c.name}", c.passed)
        rep.check(f"{name}: Killing orthocomplement equals s",
                  shadow_via_killing(res.ambient, res.k_subspace) == res.s)
        fp = fingerprint(res.s_algebra())
        stable = all(fingerprint(shadow(g, cartan_seed=opts.seed + k).s_algebra()) == fp
                     for k in range(1, CATALOG_CARTAN_SEEDS))
        stable = stable and all(
            fingerprint(shadow(random_basis_change(g, opts.seed + k)).s_algebra()) == fp
            for k in range(CATALOG_CONJUGATIONS))
        rep.check(f"{name}: shadow fingerprint stable under Cartan choice and basis change", stable)
        cs = is_completely_solvable(g)
        if cs:
            normal = True
            for k in range(CATALOG_MODIFICATIONS):
                m = random_modification(g, seed=opts.seed + k)
                if m is not None:
                    normal = normal and is_normal_modification(m) and \
                        check_mutual_bracket(m.ambient, m.s_sub, m.r)
            rep.check(f"{name}: random modifications are normal", normal)
        summary.append({
            "name": name,
            "dimension": g.dim,
            "completely_solvable": cs,
            "unimodular": is_unimodular(g),
            "nilradical_dim": nilradical(g).dim,
            "torus_dim": len(res.k),
            "shadow_fingerprint": fingerprint_obj(fp),
        })
        rep.timing[name] = time.perf_counter() - t0
    rep.objects["algebras"] = summary
    rep.objects["count"] = len(entries)
    return rep


# --- argument handling -------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "machine"], default="text")
    common.add_argument("--field", choices=["auto", "rational", "gaussian", "extend"], default="auto")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--seed", type=int, default=None)
    p = argparse.ArgumentParser(prog="solvshadow", parents=[common],
                                description="Exact shadows of real solvable Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common])
    a.add_argument("file")
    s = sub.add_parser("shadow", parents=[common])
    s.add_argument("file")
    s.add_argument("--cartan-retries", type=int, default=0)
    s.add_argument("--cross-check", action="store_true")
    m = sub.add_parser("modcheck", parents=[common])
    m.add_argument("base")
    m.add_argument("mod")
    c = sub.add_parser("catalog", parents=[common])
    c.add_argument("--filter", default="")
    f = sub.add_parser("fingerprint", parents=[common])
    f.add_argument("file")
    return p


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path, rep):
    text = _read(path)
    rep.input_digest = digest(text)
    return to_algebra(parse_document(text))


def execute(argv):
    """Run a command; returns (report or None, exit code, error message, options)."""
    opts = build_parser().parse_args(argv)
    if opts.seed is None:
        opts.seed = int(os.environ.get("SOLVSHADOW_SEED", "0"))
    logging.basicConfig(level=logging.INFO if opts.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    rep = Report(command=list(argv))
    try:
        if opts.command == "catalog":
            run_catalog(rep, opts)
        elif opts.command == "modcheck":
            g, ip = _load(opts.base, rep)
            mod_text = _read(opts.mod)
            rep.input_digest = digest(rep.input_digest + digest(mod_text))
            run_modcheck(g, ip, mod_text, rep, opts)
        else:
            g, _ = _load(opts.file, rep)
            {"analyze": run_analyze, "shadow": run_shadow,
             "fingerprint": run_fingerprint}[opts.command](g, rep, opts)
    except INPUT_ERRORS as e:
        return None, 2, f"input error: {e}", opts
    except MATH_ERRORS as e:
        rep.errors.append(f"{type(e).__name__}: {e}")
        return rep, 1, None, opts
    except (InvariantViolation, AssertionError) as e:
        rep.errors.append(f"internal invariant violated: {e}")
        return rep, 3, None, opts
    return rep, (0 if rep.ok else 1), None, opts


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    rep, code, err, opts = execute(argv)
    if err:
        print(err, file=sys.stderr)
    if rep is not None:
        sys.stdout.write(rep.to_machine() if opts.output == "machine"
                         else rep.to_text(opts.verbose))
    return code


if __name__ == "__main__":
    sys.exit(main())
