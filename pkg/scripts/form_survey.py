"""Per-group survey of linear FG-quasigroups: how large M(Q) is, how many
strong forms appear, and how often the result is simple.

    python scripts/form_survey.py --draws 300 --seed 7
"""
from __future__ import annotations

import argparse
import sys
from collections import defaultdict
from dataclasses import dataclass, field

from fgq.linear import build_linear, center, strong_forms
from fgq.search import group_catalog, random_linear
from fgq.structure import Simplicity, classify_simple, mq


@dataclass
class GroupTally:
    draws: int = 0
    mq_sizes: list[int] = field(default_factory=list)
    simple: int = 0
    strong_total: int = 0


def survey(draws: int, seed: int) -> dict[str, GroupTally]:
    tallies: dict[str, GroupTally] = defaultdict(GroupTally)
    for d in random_linear(group_catalog(), seed, draws):
        t = build_linear(d.group, d.f, d.g, d.e)
        tally = tallies[d.name]
        tally.draws += 1
        tally.mq_sizes.append(len(mq(t)))
        tally.strong_total += len(strong_forms(t))
        if t.n >= 2 and classify_simple(t).kind is not Simplicity.NOT_SIMPLE:
            tally.simple += 1
    return tallies


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--draws", type=int, default=300)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    cat = group_catalog()
    print(f"{'group':<8}{'|G|':>4}{'|Z|':>5}{'draws':>7}{'mean|M|':>9}{'strong/draw':>13}{'simple':>8}")
    for name, tally in sorted(survey(args.draws, args.seed).items(), key=lambda kv: (cat[kv[0]].n, kv[0])):
        g = cat[name]
        mean_m = sum(tally.mq_sizes) / tally.draws
        print(f"{name:<8}{g.n:>4}{len(center(g)):>5}{tally.draws:>7}{mean_m:>9.2f}"
              f"{tally.strong_total / tally.draws:>13.2f}{tally.simple:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
