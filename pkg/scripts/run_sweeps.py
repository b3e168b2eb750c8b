"""Run every regime's sweep and write one CSV per regime.

    python scripts/run_sweeps.py --out results/ --n-max 24
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from indsets.sweeps import REGIMES, SweepSpec, rows_to_csv, run_sweep


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=Path("results"))
    p.add_argument("--n-max", type=int, default=24)
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--per-case", action="store_true", help="low regime: each case's own d range")
    args = p.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for regime in REGIMES:
        n_max = args.n_max + 1 if regime == "odd" else args.n_max
        t0 = time.perf_counter()
        rows = run_sweep(SweepSpec(regime, 1, n_max, oracle_cap=n_max, threads=args.threads,
                                   per_case=args.per_case))
        path = args.out / f"sweep_{regime}.csv"
        path.write_text(rows_to_csv(rows))
        failed = sum(not r.passed for r in rows)
        print(f"{regime:6s} {len(rows):5d} rows  {failed} failed  {time.perf_counter() - t0:6.1f}s  -> {path}")


if __name__ == "__main__":
    main()
