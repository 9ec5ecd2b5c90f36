"""Probe where the (u,v)-union-intersecting maximum settles at C(n-1,k-1)+u-1.

Usage:
    python scripts/probe_uv_threshold.py --k 2 --u 2 --v 2 --n-max 7 [--budget N]
"""

from __future__ import annotations

import argparse

from extremal_sets.oracle import SearchBudget, threshold_probe_uv


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--u", type=int, default=2)
    ap.add_argument("--v", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--budget", type=int, default=10**7)
    args = ap.parse_args()

    table = threshold_probe_uv(args.k, args.u, args.v, args.n_max, SearchBudget(args.budget))
    print(f"k={table.k} u={table.u} v={table.v}")
    print(f"{'n':>3} {'oracle':>7} {'bound':>7}  complete")
    for r in table.rows:
        print(f"{r.n:>3} {r.oracle:>7} {r.bound:>7}  {r.complete}")
    tc = table.threshold_candidate
    print(f"tight from n={tc} through n={args.n_max}" if tc is not None else "not tight at the top of the probed range")


if __name__ == "__main__":
    main()
