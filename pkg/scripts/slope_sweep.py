#!/usr/bin/env python3
"""Sweep a stratum over degrees and watch M/N drift toward its limit.

Example:

    python scripts/slope_sweep.py --mu 4 --dmax 7
    python scripts/slope_sweep.py --mu 2,2 --dmax 7 --scope classes
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from origami_census import (  # noqa: E402
    StratumSignature,
    reference_rows,
    row_slope,
    stratum_constants,
    sweep,
)
from origami_census.limits import REFERENCE_GENUS_RANGE  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mu", required=True, help="zero orders, e.g. 4 or 2,2")
    ap.add_argument("--dmax", type=int, default=7)
    ap.add_argument(
        "--scope", choices=("stratum", "hyperelliptic", "classes"),
        default="classes",
    )
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    stratum = StratumSignature.from_parts(
        int(x) for x in args.mu.split(",")
    )
    consts = stratum_constants(stratum)
    print(f"stratum mu={stratum}  genus={stratum.genus}  kappa={consts.kappa}")
    if consts.exact_s is not None:
        print(
            f"closed-form hyperelliptic limit: c={consts.exact_c} "
            f"L={consts.exact_l} s={consts.exact_s}"
        )
    lo, hi = REFERENCE_GENUS_RANGE
    refs = []
    if lo <= stratum.genus <= hi:
        refs = [r for r in reference_rows(stratum.genus) if r.mu == stratum.mu]
        for r in refs:
            print(f"reference limit [{r.label}]: s = {r.slope} (~{float(r.slope):.5f})")

    t0 = time.monotonic()
    report = sweep(stratum, args.dmax, scope=args.scope, workers=args.workers)
    print(f"\n{'d':>3} {'label':<8} {'N':>6} {'M':>12} {'M/N':>12} {'slope':>10}")
    for row in report.rows:
        slope = row_slope(row, stratum)
        print(
            f"{row.degree:>3} {row.label:<8} {row.n_classes:>6} "
            f"{str(row.total_weight):>12} {str(row.ratio):>12} "
            f"{str(slope):>10}"
        )
    if report.truncated_at is not None:
        print(f"truncated at degree {report.truncated_at}")
    print(f"\n({time.monotonic() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
