"""Print (1/n) log2 i(Z) against log2 k for the standard constants.

    python scripts/convergence_table.py --n-max 1000000
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from indsets.cli import converge_rows

CASES = [
    (Fraction(1, 2), None),
    (Fraction(1, 3), None),
    (Fraction(1, 4), None),
    (Fraction(1, 10), None),
    (Fraction(1, 5), Fraction(3, 5)),
    (Fraction(1, 4), Fraction(1, 2)),
]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=10 ** 6)
    args = p.parse_args()
    for c_ind, c_deg in CASES:
        label = f"c_ind={c_ind}" + ("" if c_deg is None else f", c_deg={c_deg}")
        rows = converge_rows(c_ind, c_deg, args.n_max)
        n, rate, target, gap = rows[-1]
        print(f"{label:24s} k = {2 ** target:.6f}  n = {n:>8}  rate = {rate:.8f}  gap = {gap:.2e}")


if __name__ == "__main__":
    main()
