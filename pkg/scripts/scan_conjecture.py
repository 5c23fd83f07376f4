#!/usr/bin/env python3
"""Scan corpora for disagreements between the pseudo-arithmetical condition
and local irreducibility of the zero ideal.

The scan sweeps a ladder of corpus sizes, reports the Agree / Disagree /
Undecided census at each rung, and stops early if a replay-verified
disagreement (a genuine counterexample candidate) shows up.

Example:
    python scripts/scan_conjecture.py --orders 16,32,64 --degree-bound 3
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

from finring.classify import ClassifyConfig
from finring.corpus import CorpusConfig, run_conjecture
from finring.reports import to_json


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", default="16,32,64",
                        help="comma-separated max_order ladder")
    parser.add_argument("--degree-bound", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-dir", type=pathlib.Path, default=None,
                        help="write one JSON report per rung")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    ladder = [int(x) for x in args.orders.split(",") if x]
    classify_config = ClassifyConfig.from_env(degree_bound=args.degree_bound,
                                              seed=args.seed)
    for max_order in ladder:
        config = CorpusConfig(max_order=max_order,
                              zmod_max=min(32, max_order),
                              gf_max=min(16, max_order),
                              classify=classify_config)
        start = time.perf_counter()
        report = run_conjecture(config)
        elapsed = time.perf_counter() - start
        counts = report.counts()
        total = len(report.rows)
        print(f"max_order={max_order:4d}  rings={total:4d}  "
              f"agree={counts['Agree']:4d}  disagree={counts['Disagree']}  "
              f"undecided={counts['Undecided']:3d}  ({elapsed:.1f} s)")
        if args.out_dir is not None:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            target = args.out_dir / f"conjecture-{max_order}.json"
            target.write_text(to_json(report.to_dict()), encoding="utf-8")
            print(f"  wrote {target}", file=sys.stderr)
        for row in report.disagreements:
            print(f"  DISAGREE (replay-verified): {row.ring_name} "
                  f"order {row.order}")
        if report.disagreements:
            print("stopping: counterexample candidate found")
            return 0
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
