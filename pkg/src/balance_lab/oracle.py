"""Brute-force balancing numbers for tiny hosts, and the seeded randomized verifier."""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .coloring import ListColoring, stats
from .constructions import k5_coloring, split_coloring_c4k
from .engines import find_balanced_c4k, find_balanced_c4k2, find_balanced_odd_cycle
from .extremal import EX_CAP, cycle_family, ex_exact, half_family
from .formulas import CycleFormulaInput, bal_odd_cycle, c4k_bounds
from .graph import SmallGraph, complete, cycle
from .search import balanced_clique_sets, copy_edge_sets, find_balanced_copy, verify_witness

BAL_CAP = 24
LBAL_CAP = 15

MIN_CLASS = "min-class"
BICOLORED = "bicolored"


@dataclass(frozen=True)
class OracleResult:
    """``value`` is the max of min(|R|, |B|) over colorings with no balanced copy (0 if none exist)."""

    value: int
    witness_coloring: ListColoring | None
    colorings_examined: int


class _MaxFree:
    """Branch and bound over edge labels for colorings with no balanced copy.

    Labels are assigned edge by edge in lexicographic pair order. A copy
    with ``e`` edges stays unbalanceable only if its red-only or blue-only
    count can still exceed ceil(e/2); as soon as neither can, the branch is
    dead. The objective only decreases along a branch, which gives the bound.
    """

    def __init__(self, n: int, g: SmallGraph, labels: tuple[str, ...], objective: str):
        self.n = n
        self.pairs = list(combinations(range(n), 2))
        index = {p: i for i, p in enumerate(self.pairs)}
        self.copies = [[index[p] for p in s] for s in copy_edge_sets(n, g)]
        self.e = g.m
        self.cap = self.e - self.e // 2
        self.by_edge = [[] for _ in self.pairs]
        for j, s in enumerate(self.copies):
            for i in s:
                self.by_edge[i].append(j)
        self.labels = labels
        self.objective = objective
        self.C = len(self.pairs)

    def score(self, ro: int, bo: int) -> int:
        if self.objective == MIN_CLASS:
            return self.C - max(ro, bo)
        return self.C - ro - bo

    def run(self, prefix: tuple[str, ...] = ()) -> tuple[int, tuple[str, ...] | None, int]:
        C = self.C
        nc = len(self.copies)
        s_ro = [0] * nc
        s_bo = [0] * nc
        s_left = [self.e] * nc
        assign: list[str] = []
        best = [-1, None]
        leaves = [0]
        cap = self.cap

        def apply(i, lab, sign):
            for j in self.by_edge[i]:
                s_left[j] -= sign
                if lab == "r":
                    s_ro[j] += sign
                elif lab == "b":
                    s_bo[j] += sign

        def alive(i):
            for j in self.by_edge[i]:
                if s_ro[j] + s_left[j] <= cap and s_bo[j] + s_left[j] <= cap:
                    return False
            return True

        def rec(i, ro, bo):
            if self.score(ro, bo) <= best[0]:
                return
            if i == C:
                leaves[0] += 1
                best[0] = self.score(ro, bo)
                best[1] = tuple(assign)
                return
            options = self.labels if i >= len(prefix) else (prefix[i],)
            for lab in options:
                apply(i, lab, 1)
                assign.append(lab)
                if alive(i):
                    rec(i + 1, ro + (lab == "r"), bo + (lab == "b"))
                assign.pop()
                apply(i, lab, -1)

        rec(0, 0, 0)
        return best[0], best[1], leaves[0]

    def coloring(self, labels: tuple[str, ...]) -> ListColoring:
        return ListColoring.from_labels(self.n, dict(zip(self.pairs, labels)))


def _run_task(args):
    n, g, labels, objective, prefix = args
    return _MaxFree(n, g, labels, objective).run(prefix)


def _max_free(n: int, g: SmallGraph, labels, objective: str, fixed: tuple[str, ...], workers: int):
    engine = _MaxFree(n, g, labels, objective)
    if workers <= 1 or engine.C < 4:
        results = [engine.run(fixed)]
    else:
        # split on the next two free labels; the first optimum in task order
        # is the first optimum of the sequential search
        prefixes = [fixed]
        for _ in range(2):
            prefixes = [p + (lab,) for p in prefixes for lab in labels]
        tasks = [(n, g, labels, objective, p) for p in prefixes if len(p) <= engine.C]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks))
    best_val, best_lab, examined = -1, None, 0
    for val, lab, leaves in results:
        examined += leaves
        if val > best_val:
            best_val, best_lab = val, lab
    return best_val, (engine.coloring(best_lab) if best_lab is not None else None), examined


def _check_target(g: SmallGraph) -> None:
    if g.m == 0:
        raise ValueError("target needs at least one edge")


def bal_exact(n: int, g: SmallGraph, workers: int = 1) -> OracleResult:
    """Exact bal(n, g) over strict 2-colorings; the first edge is fixed blue by colour-swap symmetry."""
    _check_target(g)
    if comb(n, 2) > BAL_CAP:
        raise ValueError(f"bal_exact needs binomial(n, 2) <= {BAL_CAP}, got {comb(n, 2)}")
    val, wit, examined = _max_free(n, g, ("r", "b"), MIN_CLASS, ("b",), workers)
    if val < 0:
        return OracleResult(0, None, examined)
    return OracleResult(val, wit, examined)


def lbal_exact(n: int, g: SmallGraph, workers: int = 1) -> OracleResult:
    """Exact lbal(n, g) over 2-list colorings."""
    _check_target(g)
    if comb(n, 2) > LBAL_CAP:
        raise ValueError(f"lbal_exact needs binomial(n, 2) <= {LBAL_CAP}, got {comb(n, 2)}")
    val, wit, examined = _max_free(n, g, ("rb", "r", "b"), MIN_CLASS, (), workers)
    if val < 0:
        return OracleResult(0, None, examined)
    return OracleResult(val, wit, examined)


def max_bicolored_without_copy(n: int, g: SmallGraph, workers: int = 1) -> OracleResult:
    """Largest number of bicolored edges in a list coloring with no balanced copy; -1 if none exists."""
    _check_target(g)
    if comb(n, 2) > LBAL_CAP:
        raise ValueError(f"needs binomial(n, 2) <= {LBAL_CAP}, got {comb(n, 2)}")
    val, wit, examined = _max_free(n, g, ("rb", "r", "b"), BICOLORED, (), workers)
    return OracleResult(val, wit, examined)


# ---------------------------------------------------------------------------
# randomized verifier

CLAIMS = ("thm3.1", "thm3.2-upper", "thm3.5", "lemma3.3", "lemma4.4", "thm4.2")
_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (next state, output)."""
    state = (state + _GOLDEN) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def trial_seeds(root: int, trials: int) -> list[int]:
    state = root & _MASK
    out = []
    for _ in range(trials):
        state, z = splitmix64(state)
        out.append(z)
    return out


@dataclass(frozen=True)
class VerifyConfig:
    claim: str
    n: int
    trials: int
    seed: int
    k: int = 1
    alpha: int = 1
    epsilon: float = 0.5
    excess: int = 1

    def __post_init__(self):
        if self.claim not in CLAIMS:
            raise ValueError(f"unknown claim {self.claim!r}; expected one of {', '.join(CLAIMS)}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.n < 2:
            raise ValueError("n must be at least 2")


def random_two_coloring(n: int, red_size: int, rng: random.Random) -> ListColoring:
    pairs = list(combinations(range(n), 2))
    red = rng.sample(pairs, red_size)
    return ListColoring.from_classes(n, red)


def random_excess_coloring(n: int, excess: int, rng: random.Random) -> ListColoring:
    """Both classes of size ceil(C/2 + excess), the bicolored edges placed uniformly."""
    pairs = list(combinations(range(n), 2))
    C = len(pairs)
    size = -(-(C + 2 * excess) // 2)
    rb = 2 * size - C
    if size > C:
        raise ValueError(f"excess {excess} too large for n={n}")
    rng.shuffle(pairs)
    only = C - size
    return ListColoring.from_classes(n, pairs[rb:rb + only], pairs[:rb])


def _sample_two_coloring(n: int, floor_exclusive: int, rng: random.Random) -> ListColoring:
    C = comb(n, 2)
    lo, hi = floor_exclusive + 1, C - floor_exclusive - 1
    if lo > hi:
        raise ValueError(f"n={n} too small: no coloring has both classes above {floor_exclusive}")
    return random_two_coloring(n, rng.randint(lo, hi), rng)


def _witness_ok(c, target, w) -> bool:
    return w is not None and verify_witness(c, target, w)


def _run_trial(args) -> dict:
    cfg, index, seed = args
    rng = random.Random(seed)
    n, k = cfg.n, cfg.k
    detail: dict = {}
    if cfg.claim == "thm3.1":
        thr = bal_odd_cycle(CycleFormulaInput(n, k, cfg.alpha))
        c = _sample_two_coloring(n, int(thr), rng)
        res = find_balanced_odd_cycle(c, k, cfg.alpha)
        ok = _witness_ok(c, res.target, res.witness)
        detail = {"case": res.case, "red_size": stats(c).red_size}
    elif cfg.claim == "thm3.2-upper":
        upper = c4k_bounds(n, k)[1]
        c = _sample_two_coloring(n, upper - 1, rng)
        res = find_balanced_c4k(c, k)
        ok = _witness_ok(c, res.target, res.witness)
        detail = {"case": res.case, "red_size": stats(c).red_size}
    elif cfg.claim == "thm3.5":
        c = random_excess_coloring(n, cfg.excess, rng)
        res = find_balanced_c4k2(c, k)
        ok = _witness_ok(c, res.target, res.witness)
        detail = {"case": res.case}
    elif cfg.claim == "lemma3.3":
        c = split_coloring_c4k(n, k)
        red = stats(c).red_size
        none = find_balanced_copy(c, cycle(4 * k)) is None
        ok = none and red == (k - 1) * (n - k + 1)
        detail = {"red_size": red, "no_balanced_copy": none}
    elif cfg.claim == "lemma4.4":
        kc = k5_coloring(n, cfg.epsilon, seed=seed & 0xFFFFFFFF)
        found, examined, _ = balanced_clique_sets(kc.coloring, 5, stop_at_first=True)
        ok = found == 0
        detail = {"achieved_m": kc.achieved_m, "sets_examined": examined}
    else:
        if n > EX_CAP:
            raise ValueError(f"thm4.2 is checked for n <= {EX_CAP}")
        a = ex_exact(n, half_family(complete(5)))
        b = ex_exact(n, cycle_family((3, 4, 5)))
        ok = a == b
        detail = {"ex_half_k5": a, "ex_c3c4c5": b}
    return {"trial": index, "seed": seed, "ok": bool(ok), "detail": detail}


def randomized_verify(cfg: VerifyConfig, workers: int = 1) -> dict:
    """Run ``cfg.trials`` seeded trials and return a JSON-ready report.

    Trial i uses the i-th splitmix64 output of the root seed, so the report
    does not depend on ``workers``.
    """
    seeds = trial_seeds(cfg.seed, cfg.trials)
    tasks = [(cfg, i, s) for i, s in enumerate(seeds)]
    if workers <= 1:
        results = [_run_trial(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    failures = [r for r in results if not r["ok"]]
    cases: dict[str, int] = {}
    for r in results:
        case = r["detail"].get("case")
        if case is not None:
            cases[case] = cases.get(case, 0) + 1
    report = {
        "claim": cfg.claim,
        "n": cfg.n,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "params": {"k": cfg.k, "alpha": cfg.alpha, "epsilon": cfg.epsilon, "excess": cfg.excess},
        "passed": cfg.trials - len(failures),
        "failed": len(failures),
        "all_pass": not failures,
        "failures": failures,
        "cases": cases,
    }
    if cfg.claim in ("lemma3.3", "lemma4.4", "thm4.2"):
        report["first_detail"] = results[0]["detail"]
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)
