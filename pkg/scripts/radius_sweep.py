#!/usr/bin/env python3
"""Tabulate decoding radii across interleaving orders for a few codes.

Shows where the virtual-interleaving radius pulls ahead of half the minimum
distance (rate < 1/3) and where feasibility cuts the sweep off.
"""

import argparse

from rsdec import feasible, virs_radius, wb_radius


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--codes", default="16,4;31,4;31,15;63,7", help="semicolon-separated n,k pairs")
    ap.add_argument("--smax", type=int, default=8)
    args = ap.parse_args()

    codes = [tuple(map(int, part.split(","))) for part in args.codes.split(";")]
    header = ["n", "k", "d", "tau0"] + [f"s={s}" for s in range(2, args.smax + 1)]
    print("\t".join(header))
    for n, k in codes:
        row = [str(n), str(k), str(n - k + 1), str(wb_radius(n, k))]
        for s in range(2, args.smax + 1):
            row.append(str(virs_radius(n, k, s)) if feasible(n, k, s) else "-")
        print("\t".join(row))
    print()
    print("tau0 = half the minimum distance; '-' = interleaving order infeasible (s(k-1)+1 > n)")


if __name__ == "__main__":
    main()
