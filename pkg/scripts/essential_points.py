"""List the essential extreme points of t-intersecting profile vectors for small n.

Usage:
    python scripts/essential_points.py [--n-max 6] [--t-min 1]
"""

from __future__ import annotations

import argparse

from extremal_sets.polytope import essential_extreme_points, profile_points


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--t-min", type=int, default=1)
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        for t in range(max(args.t_min, 1), n + 1):
            if t == 1 and n > 5:
                continue
            reps = essential_extreme_points(n, t)
            ess = [r for r in reps if r.essential]
            print(f"n={n} t={t}: {len(profile_points(n, t).points)} maximal profiles, {len(ess)} essential")
            for r in ess:
                cert = ",".join(str(a) for a in r.certificate)
                print(f"    {r.point}  alpha=({cert})")


if __name__ == "__main__":
    main()
