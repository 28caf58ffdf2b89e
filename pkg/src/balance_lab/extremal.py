"""Half-edge subgraph families, exact Turán numbers for small n, girth-6 graphs."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import (
    INFINITE,
    SmallGraph,
    canonical_form,
    canonical_key,
    contains,
    cycle,
    distance,
    girth,
    is_isomorphic,
    linear_forest,
    parse_target,
)

EX_CAP = 10


@dataclass(frozen=True)
class FamilySpec:
    """Pairwise non-isomorphic forbidden graphs, each stored in canonical form."""

    members: tuple[SmallGraph, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for g in self.members:
            if g.m < 1:
                raise ValueError("family members need at least one edge")
        for a, b in itertools.combinations(self.members, 2):
            if is_isomorphic(a, b):
                raise ValueError("family members must be pairwise non-isomorphic")

    @classmethod
    def of(cls, graphs, name: str = "") -> "FamilySpec":
        """Deduplicate up to isomorphism and canonicalize."""
        keyed = {}
        for g in graphs:
            g = canonical_form(g.without_isolates())
            keyed.setdefault(g.to_graph6(), g)
        members = tuple(sorted(keyed.values(), key=lambda g: (g.n, g.m, g.to_graph6())))
        return cls(members, name)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g: SmallGraph) -> bool:
        return any(is_isomorphic(g.without_isolates(), h) for h in self.members)

    def found_in(self, host: SmallGraph, anchor: tuple[int, int] | None = None) -> bool:
        return any(contains(host, h, anchor) for h in self.members)


def cycle_family(lengths=(3, 4, 5)) -> FamilySpec:
    return FamilySpec.of([cycle(m) for m in lengths], name="c" + "c".join(map(str, lengths)))


def half_family(g: SmallGraph) -> FamilySpec:
    """All subgraphs of ``g`` with floor(e/2) edges and no isolated vertices, up to isomorphism."""
    edges = g.edges()
    if len(edges) < 2:
        raise ValueError(f"need at least two edges, got {len(edges)}")
    half = len(edges) // 2
    keyed = {}
    for sub in itertools.combinations(edges, half):
        verts = sorted({x for e in sub for x in e})
        index = {v: i for i, v in enumerate(verts)}
        h = SmallGraph.from_edges(len(verts), [(index[u], index[v]) for u, v in sub])
        keyed.setdefault(canonical_key(h), h)
    return FamilySpec.of(keyed.values(), name="half")


def integer_partitions(total: int, largest: int | None = None):
    """Partitions of ``total`` as non-increasing tuples."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first,) + rest


def linear_forest_family(total: int) -> FamilySpec:
    if total < 1:
        raise ValueError(f"total must be positive, got {total}")
    return FamilySpec.of([linear_forest(p) for p in integer_partitions(total)], name=f"lf{total}")


def parse_family(token: str) -> FamilySpec:
    """``c3c4c5``, ``half:<target>`` or ``lf:<total>``."""
    tok = token.strip().lower()
    if tok.startswith("half:"):
        return half_family(parse_target(tok[5:]))
    if tok.startswith("lf:"):
        return linear_forest_family(int(tok[3:]))
    if tok.startswith("c") and all(p.isdigit() for p in tok[1:].split("c")):
        return cycle_family(tuple(int(p) for p in tok[1:].split("c")))
    raise ValueError(f"unknown family {token!r}")


# ---------------------------------------------------------------------------
# exact Turán numbers

@dataclass(frozen=True)
class ExResult:
    value: int
    extremal_graph: SmallGraph
    graphs_examined: int
    level_sizes: tuple[int, ...]


def _girth_family_max(family: FamilySpec) -> int | None:
    """Longest forbidden cycle if ``family`` is exactly {C3, ..., C_g}."""
    lengths = []
    for h in family.members:
        if h.m != h.n or min(h.degrees()) != 2 or girth(h) != h.n:
            return None
        lengths.append(h.n)
    lengths.sort()
    if lengths and lengths == list(range(3, lengths[-1] + 1)):
        return lengths[-1]
    return None


def _expand(args) -> dict[str, SmallGraph]:
    graphs, family, girth_limit = args
    out: dict[str, SmallGraph] = {}
    for g in graphs:
        for u, v in itertools.combinations(range(g.n), 2):
            if g.has_edge(u, v):
                continue
            if girth_limit is not None:
                # new edge closes a cycle of length dist + 1
                if distance(g, u, v, limit=girth_limit - 1) <= girth_limit - 1:
                    continue
                h = g.add_edge(u, v)
            else:
                h = g.add_edge(u, v)
                if family.found_in(h, anchor=(u, v)):
                    continue
            key = canonical_key(h)
            if key not in out:
                out[key] = canonical_form(h)
    return out


def ex_search(n: int, family: FamilySpec, workers: int = 1) -> ExResult:
    """Exact ex(n, family) by generating family-free graphs one edge count at a time.

    Free graphs are closed under edge deletion, so every free graph with
    e edges extends a free graph with e - 1 edges; each level is kept up to
    isomorphism via canonical forms and the search stops at the first
    empty level.
    """
    if n > EX_CAP:
        raise ValueError(f"ex_exact is capped at n <= {EX_CAP}, got n={n}")
    if n < 1:
        raise ValueError("n must be positive")
    girth_limit = _girth_family_max(family)
    level = {canonical_key(SmallGraph.empty(n)): SmallGraph.empty(n)}
    best = SmallGraph.empty(n)
    examined = 1
    sizes = [1]
    while level:
        graphs = sorted(level.values(), key=lambda g: g.to_graph6())
        if workers > 1 and len(graphs) > workers:
            chunks = [graphs[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_expand, [(ch, family, girth_limit) for ch in chunks]))
            nxt: dict[str, SmallGraph] = {}
            for part in parts:
                for key, g in part.items():
                    nxt.setdefault(key, g)
        else:
            nxt = _expand((graphs, family, girth_limit))
        if nxt:
            best = min(nxt.values(), key=lambda g: g.to_graph6())
            examined += len(nxt)
            sizes.append(len(nxt))
        level = nxt
    return ExResult(best.m, best, examined, tuple(sizes))


def ex_exact(n: int, family: FamilySpec, workers: int = 1) -> int:
    return ex_search(n, family, workers).value


# ---------------------------------------------------------------------------
# girth >= 6 generator

def _closes_short_cycle(g: SmallGraph, u: int, v: int) -> bool:
    return distance(g, u, v, limit=4) <= 4


def _greedy(k: int, rng: random.Random) -> SmallGraph:
    pairs = list(itertools.combinations(range(k), 2))
    rng.shuffle(pairs)
    g = SmallGraph.empty(k)
    for u, v in pairs:
        if not _closes_short_cycle(g, u, v):
            g = g.add_edge(u, v)
    return g


def _repair(g: SmallGraph) -> SmallGraph:
    """Local search: drop one edge whenever two can be added in its place."""
    improved = True
    while improved:
        improved = False
        for e in g.edges():
            h = g.remove_edge(*e)
            added = []
            for u, v in itertools.combinations(range(g.n), 2):
                if (u, v) == e or h.has_edge(u, v):
                    continue
                if not _closes_short_cycle(h, u, v):
                    h = h.add_edge(u, v)
                    added.append((u, v))
            if len(added) >= 2:
                g = h
                improved = True
                break
    return g


def girth6_best(k: int, target: int | None = None, seed: int = 0, restarts: int = 64) -> SmallGraph:
    """Best girth >= 6 graph on ``k`` vertices found by randomized greedy insertion plus repair.

    Stops early once ``target`` edges are reached.
    """
    if k > 64:
        raise ValueError("k must be at most 64")
    rng = random.Random(seed)
    best = SmallGraph.empty(k)
    for _ in range(restarts):
        g = _repair(_greedy(k, rng))
        if g.m > best.m:
            best = g
        if target is not None and best.m >= target:
            break
    assert girth(best) >= 6 or girth(best) == INFINITE
    return best


def girth6_graph(k: int, m: int, seed: int = 0, restarts: int = 64) -> SmallGraph | None:
    """A ``k``-vertex graph of girth >= 6 with at least ``m`` edges, or None if the generator fails.

    None means the restart budget ran out, not that no such graph exists.
    """
    g = girth6_best(k, m, seed, restarts)
    return g if g.m >= m else None
