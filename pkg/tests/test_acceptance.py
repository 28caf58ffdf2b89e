"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` or directly as a script.
"""

import contextlib
import time
from math import comb

from balance_lab.coloring import stats
from balance_lab.constructions import k5_coloring, single_edge_coloring, split_coloring_c4k
from balance_lab.extremal import cycle_family, ex_exact, half_family
from balance_lab.formulas import K5, CycleFormulaInput, bal_odd_cycle
from balance_lab.graph import complete, cycle, is_isomorphic, parse_target
from balance_lab.oracle import VerifyConfig, bal_exact, lbal_exact, randomized_verify, report_json
from balance_lab.search import balanced_clique_sets, find_balanced_copy

from naive_oracles import naive_bal, naive_lbal

RESULTS: list[str] = []
SEED = 20240611


@contextlib.contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"[FAIL] criterion {number}: {title} ({time.perf_counter() - start:.1f}s) {type(exc).__name__}: {exc}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"[PASS] criterion {number}: {title} ({time.perf_counter() - start:.1f}s)"
    RESULTS.append(line)
    print(line)


def _timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def test_criterion_1_half_family_k5():
    with criterion(1, "H(K5) is exactly {C5, 4-pan, co-4-pan, bull, cricket, diamond}"):
        fam, dt = _timed(half_family, complete(5))
        named = [parse_target(t) for t in ("c5", "4pan", "co4pan", "bull", "cricket", "diamond")]
        assert len(fam) == 6
        for h in fam.members:
            assert sum(is_isomorphic(h, g) for g in named) == 1
        for g in named:
            assert g in fam
        assert dt < 1.0, f"took {dt:.2f}s"


def test_criterion_2_turan_base_cases():
    with criterion(2, "ex(n, {C3,C4,C5}) = 4, 6, 7, 9 for n = 5..8"):
        fam = cycle_family((3, 4, 5))
        for n, expected in zip(range(5, 9), (4, 6, 7, 9)):
            val, dt = _timed(ex_exact, n, fam)
            assert val == expected, f"n={n}: {val} != {expected}"
            assert dt < 60, f"n={n} took {dt:.1f}s"


def test_criterion_3_half_family_turan_equality():
    with criterion(3, "ex(n, H(K5)) = ex(n, {C3,C4,C5}) for n = 5..9"):
        start = time.perf_counter()
        half, cyc = half_family(complete(5)), cycle_family((3, 4, 5))
        values = {}
        for n in range(5, 10):
            a, b = ex_exact(n, half), ex_exact(n, cyc)
            values[n] = (a, b)
            assert a == b, f"n={n}: {a} != {b}"
        print(f"    values: {values}")
        assert time.perf_counter() - start < 600


def test_criterion_4_split_coloring_certificate():
    with criterion(4, "split colorings have no balanced C_4k and |R| = (k-1)(n-k+1)"):
        for n, k in ((8, 2), (12, 2), (12, 3)):
            c = split_coloring_c4k(n, k)
            assert stats(c).red_size == (k - 1) * (n - k + 1)
            w, dt = _timed(find_balanced_copy, c, cycle(4 * k))
            assert w is None, f"(n,k)=({n},{k}) has a balanced copy"
            assert dt < 60, f"(n,k)=({n},{k}) took {dt:.1f}s"
        # plain search without the exclusion bound, where it fits in the budget
        for n, k in ((8, 2), (12, 2)):
            w, dt = _timed(lambda c, g: find_balanced_copy(c, g, use_bound=False), split_coloring_c4k(n, k), cycle(4 * k))
            assert w is None and dt < 60


def test_criterion_5_c6_with_excess_one():
    with criterion(5, "1000 list colorings of K20 with excess 1 all give a verified balanced C6"):
        start = time.perf_counter()
        rep = randomized_verify(VerifyConfig("thm3.5", 20, 1000, SEED, k=1, excess=1))
        print(f"    cases: {rep['cases']}")
        assert rep["passed"] == 1000, f"failures (replay seeds): {[f['seed'] for f in rep['failures']]}"
        assert time.perf_counter() - start < 300


def test_criterion_6_c5_threshold():
    with criterion(6, "1000 2-colorings of K15 with |R|,|B| >= 2 give a balanced C5; single edge gives none"):
        start = time.perf_counter()
        assert bal_odd_cycle(CycleFormulaInput(15, 1, 1)) == 1
        rep = randomized_verify(VerifyConfig("thm3.1", 15, 1000, SEED, k=1, alpha=1))
        assert rep["passed"] == 1000, f"failures (replay seeds): {[f['seed'] for f in rep['failures']]}"
        c = single_edge_coloring(15)
        assert min(stats(c).red_size, stats(c).blue_size) == 1
        assert find_balanced_copy(c, cycle(5), use_bound=False) is None
        assert time.perf_counter() - start < 120


def test_criterion_7_k5_certificate():
    with criterion(7, "k5_coloring(40, 0.5) has no balanced K5 among all 658,008 vertex 5-sets"):
        start = time.perf_counter()
        kc = k5_coloring(40, 0.5)
        found, examined, first = balanced_clique_sets(kc.coloring, 5)
        assert examined == comb(40, 5) == 658_008
        assert found == 0, f"balanced K5 on {first}"
        rep = kc.lower_bound_report()
        print(f"    achieved_m={kc.achieved_m} (m={kc.params.m}); |R|={rep['red_size']} |B|={rep['blue_size']} "
              f"target={rep['target']:.3f} lower-bound sizes met at this n: {rep['met']}")
        assert time.perf_counter() - start < 600


def test_criterion_8_oracle_agreement():
    with criterion(8, "bal/lbal agree with naive oracles; bal = lbal below half"):
        start = time.perf_counter()
        for n, g in ((4, cycle(3)), (5, cycle(3)), (5, cycle(4)), (5, complete(4))):
            b, lb = bal_exact(n, g).value, lbal_exact(n, g).value
            assert b == naive_bal(n, g) and lb == naive_lbal(n, g)
            if 2 * b < comb(n, 2):
                assert b == lb
        assert time.perf_counter() - start < 600


def test_criterion_9_constants():
    with criterion(9, "c ~ 0.016 and 1/(4 sqrt 2) ~ 0.177 within 1e-3"):
        assert abs(K5.c - 0.016) < 1e-3
        assert abs(K5.upper_coeff - 0.177) < 1e-3


def test_criterion_10_determinism():
    with criterion(10, "seeded reports are byte-identical at 1 and 8 workers"):
        configs = [
            VerifyConfig("thm3.5", 20, 1000, SEED, k=1, excess=1),
            VerifyConfig("thm3.1", 15, 1000, SEED, k=1, alpha=1),
            VerifyConfig("lemma4.4", 40, 2, SEED),
        ]
        for cfg in configs:
            one = report_json(randomized_verify(cfg, workers=1))
            eight = report_json(randomized_verify(cfg, workers=8))
            assert one == eight, f"{cfg.claim} differs"


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    tests.sort(key=lambda f: int(f.__name__.split("_")[2]))
    failed = 0
    for t in tests:
        try:
            t()
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
