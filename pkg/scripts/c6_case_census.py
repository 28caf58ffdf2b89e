"""How often each C6 construction case fires on random list colorings with a given excess."""

import argparse
import json

from balance_lab.oracle import VerifyConfig, randomized_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[12, 16, 20, 24])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--excess", type=int, default=1)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for n in args.n:
        cfg = VerifyConfig("thm3.5", n, args.trials, args.seed, excess=args.excess)
        rep = randomized_verify(cfg, workers=args.workers)
        print(json.dumps({"n": n, "passed": rep["passed"], "failed": rep["failed"], "cases": rep["cases"]},
                         sort_keys=True))


if __name__ == "__main__":
    main()
