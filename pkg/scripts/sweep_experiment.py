#!/usr/bin/env python3
"""Sweep the closed form c = b^2/(4a) against the bisection oracle.

Writes a TSV table and prints the worst disagreement and tangency residual.
"""

import argparse
import math

from zdgeom import flt, sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--b", type=float, default=1.0)
    parser.add_argument("--a-min", type=float, default=0.01)
    parser.add_argument("--a-max", type=float, default=10.0)
    parser.add_argument("--steps", type=int, default=50)
    parser.add_argument("--out", default="sweep.tsv")
    parser.add_argument("--log", action="store_true",
                        help="space the a values logarithmically")
    args = parser.parse_args()

    if args.log:
        lo, hi = math.log(args.a_min), math.log(args.a_max)
        a_values = [math.exp(lo + i * (hi - lo) / (args.steps - 1))
                    for i in range(args.steps)]
    else:
        step = (args.a_max - args.a_min) / (args.steps - 1)
        a_values = [args.a_min + i * step for i in range(args.steps)]

    rows = sweep(flt(args.b), a_values)
    with open(args.out, "w") as handle:
        handle.write("a\tc_closed\tc_oracle\tmax_residual\n")
        for row in rows:
            handle.write(f"{row.a:.12g}\t{row.c_closed_form:.12g}\t"
                         f"{row.c_oracle:.12g}\t"
                         f"{row.max_tangency_residual:.3e}\n")

    worst_gap = max(abs(r.c_closed_form - r.c_oracle) for r in rows)
    worst_res = max(r.max_tangency_residual for r in rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    print(f"worst |c_closed - c_oracle| = {worst_gap:.3e}")
    print(f"worst tangency residual    = {worst_res:.3e}")


if __name__ == "__main__":
    main()
