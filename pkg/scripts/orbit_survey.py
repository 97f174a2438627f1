#!/usr/bin/env python3
"""Survey orbit decompositions of a stratum across degrees.

Prints, for each degree, the component sizes with slope, cusp count
and classification labels.

    python scripts/orbit_survey.py --mu 4 --dmax 6
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from origami_census import (  # noqa: E402
    StratumSignature,
    decompose,
    enumerate_census,
)
from origami_census.limits import component_label  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mu", required=True)
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    stratum = StratumSignature.from_parts(int(x) for x in args.mu.split(","))
    d_min = sum(m + 1 for m in stratum.mu)
    for d in range(d_min, args.dmax + 1):
        census = enumerate_census(d, stratum, workers=args.workers)
        if census.n_classes == 0:
            print(f"d={d}: empty")
            continue
        comps = decompose(census)
        print(
            f"d={d}: N={census.n_classes} M={census.total_weight} "
            f"orbits={len(comps)}"
        )
        for c in comps:
            print(
                f"    #{c.component_id}: size={c.n_classes:<4} "
                f"slope={str(c.slope):<8} label={component_label(c):<7} "
                f"cusps={c.cusp_count}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
