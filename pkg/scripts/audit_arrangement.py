#!/usr/bin/env python3
"""Audit the exponentially-spaced line arrangements up to a given size.

For each n the table lists the bisection depth actually used (the smallest
direction tilt, as a power of two), the largest coordinate numerator size
in bits, and whether the independent ordering/halving re-check is clean.
"""

import argparse
import pathlib
import sys
import time

from polycontact.arrangement import build_line_arrangement

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))
from test_arrangement import audit_arrangement  # noqa: E402


def bits(arr):
    worst = 0
    for p in arr.points.values():
        for c in p:
            worst = max(worst, c.numerator.bit_length(),
                        c.denominator.bit_length())
    return worst


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args()
    print(f"{'n':>3} {'build s':>8} {'coord bits':>10} {'audit':>6}")
    for n in range(3, args.max_n + 1):
        t0 = time.time()
        arr = build_line_arrangement(n)
        dt = time.time() - t0
        clean = "clean" if audit_arrangement(arr) == [] else "DIRTY"
        print(f"{n:>3} {dt:>8.3f} {bits(arr):>10} {clean:>6}")


if __name__ == "__main__":
    main()
