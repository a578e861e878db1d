#!/usr/bin/env python3
"""Sweep error weight across the decoding radius and print a success table.

A compact wrapper over the Monte-Carlo harness: for each weight from 0 to the
interleaved radius, run seeded trials and report per-decoder success rates and
the virs/mgs agreement rate. Writes the raw CSV next to the table if asked.
"""

import argparse

from rsdec import virs_radius
from rsdec.montecarlo import ExperimentConfig, run_montecarlo


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=17)
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=20240817)
    ap.add_argument("--threads", type=int, default=4)
    ap.add_argument("-o", "--out", default=None, help="also write the raw CSV here")
    args = ap.parse_args()

    tau = virs_radius(args.n, args.k, args.s)
    cfg = ExperimentConfig(
        q=args.q,
        n=args.n,
        k=args.k,
        s=args.s,
        weights=tuple(range(tau + 1)),
        trials=args.trials,
        seed=args.seed,
    )
    csv = run_montecarlo(cfg, threads=args.threads)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv)

    rows = [line.split(",") for line in csv.strip().splitlines()[1:]]
    by_weight = {}
    for weight, method, trials, succ, fail, mis, agree in rows:
        by_weight.setdefault(int(weight), {})[method] = (int(succ), int(trials), agree)
    print(f"RS({args.n},{args.k}) over GF({args.q}), s={args.s}, radius {tau}, {args.trials} trials per weight")
    print("weight\twb\tvirs\tmgs\tagreement")
    for w in sorted(by_weight):
        cells = []
        agree = ""
        for method in ("wb", "virs", "mgs"):
            succ, trials, a = by_weight[w][method]
            cells.append(f"{succ}/{trials}")
            agree = a or agree
        print(f"{w}\t" + "\t".join(cells) + f"\t{agree}")


if __name__ == "__main__":
    main()
