"""Desk-scale verification of the closed-form extremal bounds against exhaustive oracles.

Usage:
    python scripts/verify_theorems.py [--max-n-uniform 9] [--max-k 4] [--max-n-nonuniform 5] [--max-n-union 4]
"""

from __future__ import annotations

import argparse
import time

from extremal_sets.bounds import ak, katona_bound, union_t_bound
from extremal_sets.oracle import max_t_intersecting, max_t_intersecting_uniform, max_union_t_intersecting


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n-uniform", type=int, default=9)
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--max-n-nonuniform", type=int, default=5)
    ap.add_argument("--max-n-union", type=int, default=4)
    args = ap.parse_args()

    bad = 0
    print("uniform t-intersecting: oracle vs AK(n,k,t)")
    print(f"{'n':>3} {'k':>3} {'t':>3} {'oracle':>8} {'AK':>8} {'nodes':>10} {'sec':>7}")
    for k in range(1, args.max_k + 1):
        for t in range(1, k + 1):
            for n in range(k, args.max_n_uniform + 1):
                t0 = time.perf_counter()
                res = max_t_intersecting_uniform(n, k, t)
                value = ak(n, k, t).value
                bad += res.optimum != value or not res.complete
                print(f"{n:>3} {k:>3} {t:>3} {res.optimum:>8} {value:>8} {res.nodes_explored:>10} "
                      f"{time.perf_counter() - t0:>7.2f}")

    print("\nnon-uniform t-intersecting: oracle vs Katona bound")
    for n in range(1, args.max_n_nonuniform + 1):
        for t in range(1, n + 1):
            res = max_t_intersecting(n, t)
            bad += res.optimum != katona_bound(n, t)
            print(f"n={n} t={t}: oracle {res.optimum}, bound {katona_bound(n, t)}")

    print("\nunion-t-intersecting: oracle vs closed form")
    for n in range(1, args.max_n_union + 1):
        for t in range(1, n + 1):
            res = max_union_t_intersecting(n, t)
            bad += res.optimum != union_t_bound(n, t) or not res.complete
            print(f"n={n} t={t}: oracle {res.optimum}, bound {union_t_bound(n, t)}, nodes {res.nodes_explored}")

    print(f"\n{'all agree' if not bad else f'{bad} disagreements'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
