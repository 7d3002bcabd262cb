"""Predicate census over exhaustive (or reduced / sampled) Latin squares.

    python scripts/census_sweep.py --orders 3 4 5 --filters F FG medial group isogroup
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from fgq.search import PREDICATES, SearchSpec, census, threads_from_env


@dataclass(frozen=True)
class SweepConfig:
    orders: tuple[int, ...] = (3, 4, 5)
    mode: str = "exhaustive"
    filters: tuple[str, ...] = ("F", "FG", "medial", "group", "isogroup")
    count: int = 0
    seed: int | None = None
    workers: int = field(default_factory=threads_from_env)


def sweep(cfg: SweepConfig):
    rows = []
    for n in cfg.orders:
        spec = SearchSpec(order=n, mode=cfg.mode, count=cfg.count, seed=cfg.seed, filters=cfg.filters)
        t0 = time.perf_counter()
        counts = census(spec, workers=cfg.workers)
        dt = time.perf_counter() - t0
        for combo, k in counts.items():
            rows.append({"order": n, "mode": cfg.mode, "filters": "&".join(combo), "count": k,
                         "seconds": round(dt, 2)})
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--mode", choices=("exhaustive", "reduced", "random"), default="exhaustive")
    ap.add_argument("--filters", nargs="+", default=list(SweepConfig.filters), help=" ".join(PREDICATES))
    ap.add_argument("--count", type=int, default=0)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--csv", help="also write rows to this file")
    args = ap.parse_args(argv)
    cfg = SweepConfig(tuple(args.orders), args.mode, tuple(args.filters), args.count, args.seed)
    rows = sweep(cfg)
    for r in rows:
        print(f"n={r['order']:<2} {r['filters']:<32} {r['count']:>8}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
