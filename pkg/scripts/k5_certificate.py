"""Build the K5 lower-bound coloring and certify that no vertex 5-set carries a balanced K5."""

import argparse
import json
import time

from balance_lab.constructions import k5_coloring
from balance_lab.search import balanced_clique_sets


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[30, 40, 50])
    ap.add_argument("--eps", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="write the last coloring as JSON here")
    args = ap.parse_args()

    for n in args.n:
        t = time.perf_counter()
        kc = k5_coloring(n, args.eps, seed=args.seed)
        found, examined, first = balanced_clique_sets(kc.coloring, 5, stop_at_first=True)
        rep = kc.lower_bound_report()
        print(json.dumps({
            "n": n, "k": kc.params.k, "k_prime": kc.params.k_prime, "m": kc.params.m,
            "achieved_m": kc.achieved_m, "balanced_k5": found, "sets_examined": examined,
            "red": rep["red_size"], "blue": rep["blue_size"], "target": round(rep["target"], 3),
            "lower_bound_met": rep["met"], "secs": round(time.perf_counter() - t, 2),
        }))
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(kc.coloring.to_json(n=n, epsilon=args.eps, achieved_m=kc.achieved_m))


if __name__ == "__main__":
    main()
