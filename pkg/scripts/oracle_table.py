"""Exact bal and lbal for tiny hosts, with the large-n predictions where one exists."""

import argparse
from math import comb

from balance_lab.formulas import format_rational, half_pairs
from balance_lab.graph import parse_target
from balance_lab.oracle import BAL_CAP, LBAL_CAP, bal_exact, lbal_exact

DEFAULT = ["p2", "c3", "c4", "c5", "k4", "k5", "bull", "diamond"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--targets", nargs="+", default=DEFAULT)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
    args = ap.parse_args()

    print(f"{'target':>8} {'n':>3} {'C/2':>5} {'bal':>4} {'lbal':>5}")
    for tok in args.targets:
        g = parse_target(tok)
        for n in args.n:
            if g.n > n or comb(n, 2) > BAL_CAP:
                continue
            b = bal_exact(n, g).value
            lb = lbal_exact(n, g).value if comb(n, 2) <= LBAL_CAP else None
            print(f"{tok:>8} {n:>3} {format_rational(half_pairs(n)):>5} {b:>4} {'-' if lb is None else lb:>5}")


if __name__ == "__main__":
    main()
