"""Run the verification battery and dump a JSON summary.

    python scripts/run_battery.py --max-order 5 --sample 0 --seed 1 --json battery.json
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict

from fgq.replay import ReplayConfig, run_battery


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--sample", type=int, default=0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--linear", type=int, default=40)
    ap.add_argument("--maps", type=int, default=300)
    ap.add_argument("--modules", type=int, default=50)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    cfg = ReplayConfig(args.max_order, args.sample, args.seed, args.linear, args.maps, args.modules)
    t0 = time.perf_counter()
    corpus, results = run_battery(cfg)
    elapsed = time.perf_counter() - t0
    for r in results:
        print(r.line())
    print(f"corpus size {corpus.count()}, {elapsed:.1f}s")
    if args.json:
        summary = {
            "config": asdict(cfg),
            "corpus": {str(n): len(s) for n, s in corpus.stacks.items()} | {"linear": len(corpus.linear)},
            "seconds": round(elapsed, 2),
            "checks": [{"name": r.name, "passed": r.passed, "instances": r.instances, "failures": r.failures,
                        "first_failure": r.example, **r.extra} for r in results],
        }
        with open(args.json, "w") as fh:
            json.dump(summary, fh, indent=2)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
