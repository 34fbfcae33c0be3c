#!/usr/bin/env python3
"""Tabulate min_Q l(Q, m) per index r, the quantity behind excluding large indices.

With chi = 1 and P_2 = 0, P_18 > -35 + l(Q,18) and P_15 > -29 + l(Q,15) for any
single singularity Q in the basket, so an index r is excluded once the minimum
clears the threshold.

    python scripts/index_scan.py --rmin 20 --rmax 40
"""

from __future__ import annotations

import argparse

from plurigenera.basket import canonical_singularities, format_rational, local_correction


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rmin", type=int, default=20)
    ap.add_argument("--rmax", type=int, default=40)
    args = ap.parse_args()

    print(f"{'r':>3} {'types':>5} {'min l(Q,15)':>14} {'P15>=1':>6} {'min l(Q,18)':>14} {'P18>=3':>6}")
    for r in range(max(2, args.rmin), args.rmax + 1):
        qs = canonical_singularities(r)
        l15 = min(local_correction(q, 15) for q in qs)
        l18 = min(local_correction(q, 18) for q in qs)
        print(
            f"{r:>3} {len(qs):>5} {format_rational(l15):>14} {str(l15 >= 29):>6}"
            f" {format_rational(l18):>14} {str(l18 > 37):>6}"
        )


if __name__ == "__main__":
    main()
