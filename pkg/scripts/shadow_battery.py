"""Shadow construction over the catalog and seeded random solvable algebras.

Prints one line per algebra: dimension, torus dimension, verification
result, Killing cross-check and the shadow's derived-series profile.

    python3 scripts/shadow_battery.py --random 100 --max-dim 5
"""
import argparse
import time
from dataclasses import dataclass

from solvshadow.catalog import catalog, random_solvable
from solvshadow.errors import DegeneratePairing
from solvshadow.shadow import fingerprint, shadow, shadow_via_killing, verify_shadow


@dataclass
class BatteryConfig:
    random: int = 100
    max_dim: int = 5
    include_catalog: bool = True


def run(cfg):
    algebras = list(catalog()) if cfg.include_catalog else []
    algebras += [random_solvable(seed, max_dim=cfg.max_dim) for seed in range(cfg.random)]
    failed = 0
    t0 = time.perf_counter()
    for g in algebras:
        res = shadow(g)
        bad = "".join(c.key for c in verify_shadow(res) if not c.passed)
        try:
            killing = shadow_via_killing(res.ambient, res.k_subspace) == res.s
        except DegeneratePairing:
            killing = False
        fp = fingerprint(res.s_algebra())
        failed += bool(bad) or not killing
        print(f"{g.name:20s} dim {g.dim}  torus {len(res.k)}  "
              f"checks {'ok' if not bad else 'FAILED ' + bad:10s} killing {'ok' if killing else 'MISMATCH'}  "
              f"derived {fp.derived_profile}")
    print(f"{len(algebras)} algebras, {failed} failures, {time.perf_counter() - t0:.1f}s")
    return failed


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--random", type=int, default=BatteryConfig.random)
    p.add_argument("--max-dim", type=int, default=BatteryConfig.max_dim)
    p.add_argument("--no-catalog", action="store_true")
    a = p.parse_args()
    return 1 if run(BatteryConfig(a.random, a.max_dim, not a.no_catalog)) else 0


if __name__ == "__main__":
    raise SystemExit(main())
