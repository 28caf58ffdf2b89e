"""Exact ex(n, F) for the girth-6 family and the half-edge family of K5, side by side."""

import argparse
import time

from balance_lab.extremal import cycle_family, ex_search, half_family
from balance_lab.formulas import girth6_asymptotic, structural_upper_bound
from balance_lab.graph import complete


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cyc = cycle_family((3, 4, 5))
    half = half_family(complete(5))
    print(f"{'n':>3} {'ex(C3C4C5)':>11} {'ex(H(K5))':>10} {'n^1.5/2√2':>10} {'bound':>7} {'secs':>6}")
    for n in range(args.n_min, args.n_max + 1):
        t = time.perf_counter()
        a = ex_search(n, cyc, args.workers)
        b = ex_search(n, half, args.workers)
        dt = time.perf_counter() - t
        bound = structural_upper_bound(n, b.value)
        print(f"{n:>3} {a.value:>11} {b.value:>10} {girth6_asymptotic(n):>10.2f} {float(bound):>7.1f} {dt:>6.1f}")


if __name__ == "__main__":
    main()
