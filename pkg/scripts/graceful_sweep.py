"""Count graceful and alpha-labelings of every tree class up to n_max.

    python scripts/graceful_sweep.py --n-max 9 [--threads 4]
"""

import argparse
import time

from graceful_lab.families import generate_trees
from graceful_lab.search import ConstraintSet, search_graceful


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>3} {'classes':>8} {'min graceful':>13} {'no alpha':>9} {'seconds':>8}")
    for n in range(1, args.n_max + 1):
        start = time.perf_counter()
        trees = generate_trees(n)
        counts = [search_graceful(t, mode="count", threads=args.threads).count for t in trees]
        no_alpha = sum(
            not search_graceful(t, ConstraintSet(require_alpha=True), threads=args.threads).sat for t in trees
        )
        assert min(counts) > 0, f"found a non-graceful tree at n={n}"
        print(f"{n:>3} {len(trees):>8} {min(counts):>13} {no_alpha:>9} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
