#!/usr/bin/env python3
"""Print small character tables for both families.

Each row shows the shape, the character in canonical text form, and its
dimension-style evaluation at the all-ones point.

Examples:
    python scripts/character_tables.py --n 2 --m 0 --max-weight 4
    python scripts/character_tables.py --family o --n 1 --m 1
"""

import argparse
import sys
from fractions import Fraction

from spochar.characters import o_universal, sp_universal
from spochar.partitions import enumerate_partitions


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("sp", "o", "both"), default="both")
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--m", type=int, default=0)
    ap.add_argument("--max-weight", type=int, default=4)
    args = ap.parse_args()

    fams = [("sp", sp_universal), ("o", o_universal)]
    if args.family != "both":
        fams = [f for f in fams if f[0] == args.family]

    shapes = list(enumerate_partitions(args.n + args.m, args.max_weight))
    for name, fn in fams:
        print(f"family {name}, n={args.n}, m={args.m}")
        for lam in shapes:
            c = fn(lam, args.n, args.m)
            point = {v: Fraction(1) for v in c.variables()}
            dim = c.evaluate(point) if c.variables() else c.constant_value()
            label = ",".join(map(str, lam.parts)) or "-"
            print(f"  ({label:<8})  dim {str(dim):>6}   {c.text()}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
