"""Fuzz random modifications of the completely solvable catalog bases.

Every valid modification must be normal (phi kills [s, s]) and must satisfy
[s, r] ⊆ s ∩ r.  Counterexamples are written as replayable JSON documents.

    python3 scripts/fuzz_modifications.py --seeds 1000 --dump-dir fuzz_out
"""
import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from solvshadow.catalog import completely_solvable_bases
from solvshadow.document import document_from_algebra, document_to_obj, modification_to_obj
from solvshadow.exactlin import is_zero
from solvshadow.modcheck import check_mutual_bracket, is_normal_modification, random_modification
from solvshadow.shadow import fingerprint, shadow


@dataclass
class FuzzConfig:
    seeds: int = 1000
    start: int = 0
    round_trip_every: int = 10
    dump_dir: str = "fuzz_out"


def run(cfg):
    bases = completely_solvable_bases()
    stats = {"instances": 0, "nontrivial": 0, "exhausted": 0, "round_trips": 0, "counterexamples": 0}
    t0 = time.perf_counter()
    for seed in range(cfg.start, cfg.start + cfg.seeds):
        s = bases[seed % len(bases)]
        m = random_modification(s, seed=seed)
        if m is None:
            stats["exhausted"] += 1
            continue
        stats["instances"] += 1
        stats["nontrivial"] += bool(m.t) and not is_zero(m.phi)
        ok = is_normal_modification(m) and check_mutual_bracket(m.ambient, m.s_sub, m.r)
        if ok and cfg.round_trip_every and seed % cfg.round_trip_every == 0:
            stats["round_trips"] += 1
            ok = fingerprint(shadow(m.algebra()).s_algebra()) == fingerprint(s)
        if not ok:
            stats["counterexamples"] += 1
            out = Path(cfg.dump_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"seed{seed}_base.json").write_text(
                json.dumps(document_to_obj(document_from_algebra(s)), indent=2, sort_keys=True))
            (out / f"seed{seed}_mod.json").write_text(
                json.dumps(modification_to_obj(m), indent=2, sort_keys=True))
    stats["seconds"] = round(time.perf_counter() - t0, 1)
    return stats


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, default=FuzzConfig.seeds)
    p.add_argument("--start", type=int, default=FuzzConfig.start)
    p.add_argument("--round-trip-every", type=int, default=FuzzConfig.round_trip_every)
    p.add_argument("--dump-dir", default=FuzzConfig.dump_dir)
    a = p.parse_args()
    stats = run(FuzzConfig(a.seeds, a.start, a.round_trip_every, a.dump_dir))
    print(json.dumps(stats, indent=2))
    return 1 if stats["counterexamples"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
