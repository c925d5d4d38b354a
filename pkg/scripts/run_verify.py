#!/usr/bin/env python3
"""Run the identity suites and print a summary table.

Examples:
    python scripts/run_verify.py
    python scripts/run_verify.py --suite commutation --max-weight 4
    python scripts/run_verify.py --json out.json
"""

import argparse
import json
import sys
import time

from spochar.verify import SUITE_NAMES, Grid, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", action="append", choices=SUITE_NAMES, default=None,
                    help="suite to run (repeatable; default: all)")
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--m-max", type=int, default=2)
    ap.add_argument("--max-weight", type=int, default=6)
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--degree-cap", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--eval-points", type=int, default=0,
                    help="random-point pre-screens per comparison (0 = structural only)")
    ap.add_argument("--json", metavar="PATH", default=None,
                    help="also write the reports as JSON")
    args = ap.parse_args()

    grid = Grid(
        n_range=(0, args.n_max),
        m_range=(0, args.m_max),
        max_weight=args.max_weight,
        max_len=args.max_len,
        degree_cap=args.degree_cap,
        rng_seed=args.seed,
        eval_points=args.eval_points,
    )
    names = args.suite or list(SUITE_NAMES)

    reports = []
    width = max(len(n) for n in names)
    all_ok = True
    for name in names:
        t0 = time.perf_counter()
        rep = run_suite(name, grid)
        dt = time.perf_counter() - t0
        reports.append(rep)
        status = "PASS" if rep.passed else "FAIL"
        all_ok = all_ok and rep.passed
        print(f"{name:<{width}}  {status}  {rep.instances_run:>6} instances  {dt:7.2f}s")
        for note in rep.notes:
            print(f"{'':<{width}}  note: {note}")
        for failure in rep.failures[:5]:
            print(f"{'':<{width}}  fail: {failure[0]}")

    if args.json:
        payload = {
            "grid": grid.to_json(),
            "reports": [r.to_json() for r in reports],
            "passed": all_ok,
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
        print(f"wrote {args.json}")

    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
