"""Tabulate invariants of the two-parameter family over a grid, with timings.

    python scripts/family_grid.py --max-n 5
"""

import argparse
import time

from semigroup_rings.cli import classify_document
from semigroup_rings.families import family_document


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>2s} {'k':>2s} {'h':14s} {'type':>4s} {'level':>6s} {'NG':>5s} {'AG':>5s} {'sec':>6s}")
    for n in range(2, args.max_n + 1):
        for k in range(1, n + 2):
            t0 = time.perf_counter()
            rep = classify_document(family_document(n, k))
            dt = time.perf_counter() - t0
            print(f"{n:2d} {k:2d} {str(rep.h_vector):14s} {rep.cm_type:4d} {str(rep.is_level):>6s} "
                  f"{str(rep.is_nearly_gorenstein):>5s} {str(rep.is_almost_gorenstein):>5s} {dt:6.2f}")


if __name__ == "__main__":
    main()
