"""Explicit colorings: the C_4k lower-bound split, the pattern fixtures and the K5 lower-bound coloring."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from math import comb

from .coloring import ListColoring, stats
from .extremal import girth6_best
from .formulas import K5
from .graph import SmallGraph


def split_coloring_c4k(n: int, k: int) -> ListColoring:
    """Vertices 0..k-2 form V1; edges between V1 and the rest are red-only, all else blue-only."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 4 * k:
        raise ValueError(f"need n >= 4k, got n={n}, k={k}")
    v1 = range(k - 1)
    red = [(u, v) for u in v1 for v in range(k - 1, n)]
    return ListColoring.from_classes(n, red)


def clique_split_coloring(n: int, a: int) -> ListColoring:
    """Edges inside {0..a-1} red-only, every other edge blue-only."""
    if not 0 <= a <= n:
        raise ValueError(f"need 0 <= a <= n, got a={a}, n={n}")
    return ListColoring.from_classes(n, itertools.combinations(range(a), 2))


def type_b_coloring(n: int, t: int, rb_edges=()) -> ListColoring:
    """X = {0..t-1}, Y = {t..2t-1} red-only inside, blue-only elsewhere; ``rb_edges`` upgraded to rb."""
    if t < 1 or 2 * t > n:
        raise ValueError(f"need 1 <= t and 2t <= n, got t={t}, n={n}")
    rb = []
    for u, v in rb_edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"invalid edge position ({u}, {v}) for n={n}")
        rb.append((u, v))
    red = list(itertools.combinations(range(t), 2)) + list(itertools.combinations(range(t, 2 * t), 2))
    return ListColoring.from_classes(n, red, rb)


def single_edge_coloring(n: int) -> ListColoring:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return ListColoring.from_classes(n, [(0, 1)])


@dataclass(frozen=True)
class K5Params:
    n: int
    epsilon: float
    alpha: float
    beta: float
    k: int
    k_prime: int
    m: int

    @classmethod
    def compute(cls, n: int, epsilon: float) -> "K5Params":
        if not 0 < epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
        alpha = 1 - 1 / math.sqrt(2)
        beta = (1 - epsilon / 2) * (alpha / 2) ** 1.5
        k = math.ceil(alpha * n)
        k_prime = math.ceil(alpha * n + beta * math.sqrt(n))
        m = math.floor(beta * n ** 1.5)
        if not k <= k_prime <= n:
            raise ValueError(f"need k <= k' <= n, got k={k}, k'={k_prime}, n={n}")
        return cls(n, epsilon, alpha, beta, k, k_prime, m)


@dataclass(frozen=True)
class K5Coloring:
    coloring: ListColoring
    params: K5Params
    achieved_m: int
    bicolored_graph: SmallGraph
    x_set: tuple[int, ...]
    y_set: tuple[int, ...]

    @property
    def degenerate(self) -> bool:
        return self.achieved_m == 0

    def lower_bound_report(self) -> dict:
        """Whether both classes reach half of binomial(n,2) + (1 - eps) c n^{3/2} at this n."""
        s = stats(self.coloring)
        n = self.params.n
        target = comb(n, 2) / 2 + (1 - self.params.epsilon) * K5.c * n ** 1.5
        return {
            "red_size": s.red_size,
            "blue_size": s.blue_size,
            "bicolored": s.bicolored,
            "target": target,
            "met": min(s.red_size, s.blue_size) >= target,
        }


def k5_coloring(n: int, epsilon: float, seed: int = 0, restarts: int = 64) -> K5Coloring:
    """X = first n - k' vertices with red-only interior; a girth >= 6 graph on the first k vertices
    of Y is bicolored; every other edge is blue-only.

    The generator may fall short of m edges; ``achieved_m`` reports what was used.
    """
    p = K5Params.compute(n, epsilon)
    x = tuple(range(n - p.k_prime))
    y = tuple(range(n - p.k_prime, n))
    h = girth6_best(p.k, p.m, seed=seed, restarts=restarts)
    h_edges = h.edges()[: p.m]
    host_slots = y[: p.k]
    rb = [(host_slots[a], host_slots[b]) for a, b in h_edges]
    c = ListColoring.from_classes(n, itertools.combinations(x, 2), rb)
    bic = SmallGraph.from_edges(p.k, h_edges)
    return K5Coloring(c, p, len(h_edges), bic, x, y)
