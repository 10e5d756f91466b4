#!/usr/bin/env python3
"""Tabulate the conditioning dichotomy of the weighted exponential families.

For the singular weight (sign -) the upper constant grows with the family size
while the lower one stays put; for the vanishing weight (sign +) the roles
swap.  Prints a table and optionally writes it as CSV.

Usage:
    python scripts/exponential_dichotomy.py --a 0.25 --sizes 8 16 32 64
"""
import argparse
import csv
import sys

from framekit import hilbertian_besselian, weighted_exponentials


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=float, default=0.25)
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32])
    parser.add_argument("--out", default=None, help="optional CSV output path")
    args = parser.parse_args(argv)

    rows = []
    for sign in ("-", "+"):
        for big_n in args.sizes:
            system = weighted_exponentials(args.a, big_n, sign)
            hilbertian, besselian = hilbertian_besselian(system)
            rows.append(
                {
                    "sign": sign,
                    "N": big_n,
                    "count": system.count,
                    "hilbertian": hilbertian,
                    "besselian": besselian,
                }
            )

    print(f"{'sign':>4} {'N':>5} {'count':>6} {'hilbertian':>12} {'besselian':>12}")
    for row in rows:
        print(
            f"{row['sign']:>4} {row['N']:>5} {row['count']:>6} "
            f"{row['hilbertian']:>12.6f} {row['besselian']:>12.6f}"
        )
    if args.out:
        with open(args.out, "w", newline="") as handle:
            writer = csv.DictWriter(
                handle, fieldnames=["sign", "N", "count", "hilbertian", "besselian"]
            )
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
