"""Search for balanced copies of a graph in a 2-list edge coloring of K_n.

A copy is balanced when its edges split into E1 ⊆ R and E2 ⊆ B with
||E1| - |E2|| <= 1. For a fixed copy let ``ro`` be the number of red-only
edges and ``bo`` the number of blue-only edges; bicolored edges can go
either way, so the copy can be balanced iff ``ro <= ceil(e/2)`` and
``bo <= ceil(e/2)``. Both counts only grow as the embedding is extended,
which is what the search prunes on.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .coloring import ListColoring
from .graph import SmallGraph, bits, search_order, symmetry_conditions


@dataclass(frozen=True)
class BalancedWitness:
    """``mapping[i]`` is the host vertex of pattern vertex ``i``; ``colors`` follows ``pattern.edges()``."""

    mapping: tuple[int, ...]
    colors: tuple[str, ...]

    def host_edges(self, pattern: SmallGraph) -> list[tuple[int, int, str]]:
        out = []
        for (a, b), col in zip(pattern.edges(), self.colors):
            u, v = self.mapping[a], self.mapping[b]
            out.append((min(u, v), max(u, v), col))
        return out

    def counts(self) -> tuple[int, int]:
        return self.colors.count("r"), self.colors.count("b")

    def to_dict(self, pattern: SmallGraph) -> dict:
        return {
            "mapping": list(self.mapping),
            "edges": [{"u": u, "v": v, "color": col} for u, v, col in self.host_edges(pattern)],
        }

    def to_json(self, pattern: SmallGraph) -> str:
        return json.dumps(self.to_dict(pattern))

    @classmethod
    def from_dict(cls, data: dict, pattern: SmallGraph) -> "BalancedWitness":
        mapping = tuple(int(x) for x in data["mapping"])
        by_edge = {(min(e["u"], e["v"]), max(e["u"], e["v"])): e["color"] for e in data["edges"]}
        colors = []
        for a, b in pattern.edges():
            u, v = mapping[a], mapping[b]
            colors.append(by_edge[(min(u, v), max(u, v))])
        return cls(mapping, tuple(colors))


def assign_colors(c: ListColoring, host_edges: list[tuple[int, int]]) -> tuple[str, ...] | None:
    """Pick r/b per edge so the split is balanced, or None if impossible.

    Bicolored edges are filled red first, in the given order.
    """
    e = len(host_edges)
    labels = [c.label(u, v) for u, v in host_edges]
    ro = labels.count("r")
    bo = labels.count("b")
    rb = e - ro - bo
    for red_total in (e // 2, e - e // 2):
        if ro <= red_total <= ro + rb:
            extra = red_total - ro
            out = []
            for lab in labels:
                if lab == "rb":
                    out.append("r" if extra > 0 else "b")
                    extra -= 1
                else:
                    out.append(lab)
            return tuple(out)
    return None


def verify_witness(c: ListColoring, g: SmallGraph, w: BalancedWitness) -> bool:
    m = w.mapping
    if len(m) != g.n or len(set(m)) != g.n or any(not 0 <= h < c.n for h in m):
        return False
    if len(w.colors) != g.m:
        return False
    for (a, b), col in zip(g.edges(), w.colors):
        u, v = m[a], m[b]
        if col == "r" and not c.red[u] >> v & 1:
            return False
        if col == "b" and not c.blue[u] >> v & 1:
            return False
        if col not in ("r", "b"):
            return False
    r, b = w.counts()
    return abs(r - b) <= 1


# ---------------------------------------------------------------------------

def _greedy_cover(rows: tuple[int, ...]) -> list[int]:
    """A vertex cover of the graph given by ``rows`` (max-degree greedy)."""
    rows = list(rows)
    cover = []
    while True:
        u = max(range(len(rows)), key=lambda x: (rows[x].bit_count(), -x))
        if rows[u] == 0:
            return cover
        cover.append(u)
        for v in bits(rows[u]):
            rows[v] &= ~(1 << u)
        rows[u] = 0


def cover_bound(rows: tuple[int, ...], max_degree: int) -> int:
    """Upper bound on how many edges of the ``rows`` graph a copy of max degree ``max_degree`` can use.

    Each such edge touches the cover, and a cover vertex hosts at most
    ``min(max_degree, its degree)`` of them.
    """
    return sum(min(max_degree, rows[u].bit_count()) for u in _greedy_cover(rows))


class _Search:
    def __init__(self, c: ListColoring, g: SmallGraph):
        self.c = c
        self.g = g
        self.e = g.m
        self.cap = self.e - self.e // 2
        self.order = search_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        self.back = [[w for w in bits(g.adj[v]) if pos[w] < i] for i, v in enumerate(self.order)]
        conds = symmetry_conditions(g, self.order)
        # image of the later-placed vertex must be above / below the earlier one
        self.above = [[] for _ in self.order]
        self.below = [[] for _ in self.order]
        for a, b in conds:
            if pos[a] < pos[b]:
                self.above[pos[b]].append(a)
            else:
                self.below[pos[a]].append(b)
        self.ro_rows = c.red_only()
        self.bo_rows = c.blue_only()
        self.img = [-1] * g.n
        self.full = (1 << c.n) - 1
        self.nodes = 0

    def _candidates(self, i: int, used: int) -> int:
        cand = self.full & ~used
        for a in self.above[i]:
            cand &= ~((1 << (self.img[a] + 1)) - 1)
        for b in self.below[i]:
            cand &= (1 << self.img[b]) - 1
        return cand

    def run(self, i: int, used: int, ro: int, bo: int, first: int | None = None) -> bool:
        self.nodes += 1
        if i == self.g.n:
            return True
        v = self.order[i]
        cand = self._candidates(i, used)
        if first is not None:
            cand &= 1 << first
        back_img = 0
        for w in self.back[i]:
            back_img |= 1 << self.img[w]
        cap = self.cap
        ro_rows, bo_rows = self.ro_rows, self.bo_rows
        for h in bits(cand):
            nro = ro + (ro_rows[h] & back_img).bit_count()
            if nro > cap:
                continue
            nbo = bo + (bo_rows[h] & back_img).bit_count()
            if nbo > cap:
                continue
            self.img[v] = h
            if self.run(i + 1, used | 1 << h, nro, nbo):
                return True
        self.img[v] = -1
        return False

    def witness(self) -> BalancedWitness:
        mapping = tuple(self.img)
        host = [(mapping[a], mapping[b]) for a, b in self.g.edges()]
        colors = assign_colors(self.c, host)
        assert colors is not None
        return BalancedWitness(mapping, colors)


def _bound_excludes(c: ListColoring, g: SmallGraph) -> bool:
    e = g.m
    need = e // 2
    delta = max(g.degrees(), default=0)
    return cover_bound(c.red, delta) < need or cover_bound(c.blue, delta) < need


def _search_from(args) -> tuple[int, BalancedWitness | None]:
    c, g, first = args
    s = _Search(c, g)
    if s.run(0, 0, 0, 0, first=first):
        return s.nodes, s.witness()
    return s.nodes, None


def default_workers() -> int:
    env = os.environ.get("BALANCE_LAB_WORKERS")
    if env and env.lower() != "auto":
        return max(1, int(env))
    if env:
        return os.cpu_count() or 1
    return 1


def find_balanced_copy(c: ListColoring, g: SmallGraph, *, use_bound: bool = True,
                       workers: int | None = None, deterministic: bool = True) -> BalancedWitness | None:
    """First balanced copy of ``g`` under the deterministic search order, or None.

    ``use_bound`` enables a vertex-cover count that can rule out every copy
    before searching; disabling it leaves a plain exhaustive search.
    With ``workers > 1`` the first image vertex is split across processes;
    in deterministic mode the lowest successful starting vertex wins, which
    is also what the sequential search returns.
    """
    if g.n > c.n:
        return None
    if g.m == 0:
        return BalancedWitness(tuple(range(g.n)), ())
    if use_bound and _bound_excludes(c, g):
        return None
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        s = _Search(c, g)
        return s.witness() if s.run(0, 0, 0, 0) else None
    tasks = [(c, g, h) for h in range(c.n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        if deterministic:
            for _, w in pool.map(_search_from, tasks):
                if w is not None:
                    return w
            return None
        futures = [pool.submit(_search_from, t) for t in tasks]
        from concurrent.futures import as_completed
        for fut in as_completed(futures):
            _, w = fut.result()
            if w is not None:
                for other in futures:
                    other.cancel()
                return w
        return None


def count_search_nodes(c: ListColoring, g: SmallGraph) -> tuple[bool, int]:
    """Run the plain exhaustive search and report (found, nodes visited)."""
    s = _Search(c, g)
    found = s.run(0, 0, 0, 0)
    return found, s.nodes


def balanced_clique_sets(c: ListColoring, size: int, stop_at_first: bool = False) -> tuple[int, int, tuple[int, ...] | None]:
    """Exhaustively check every ``size``-subset of vertices for a balanced K_size.

    Returns ``(balanced_sets, sets_examined, first_balanced_set)``. Since
    every labeling of a clique on a fixed vertex set covers the same edges,
    this is the full embedding check for complete targets.
    """
    e = size * (size - 1) // 2
    cap = e - e // 2
    ro_rows, bo_rows = c.red_only(), c.blue_only()
    n = c.n
    found = 0
    examined = 0
    first = None
    chosen: list[int] = []

    def rec(start: int, mask: int, ro: int, bo: int) -> bool:
        nonlocal found, examined, first
        if len(chosen) == size:
            examined += 1
            if ro <= cap and bo <= cap:
                found += 1
                if first is None:
                    first = tuple(chosen)
                return stop_at_first
            return False
        for h in range(start, n - (size - len(chosen)) + 1):
            chosen.append(h)
            stop = rec(h + 1, mask | 1 << h, ro + (ro_rows[h] & mask).bit_count(), bo + (bo_rows[h] & mask).bit_count())
            chosen.pop()
            if stop:
                return True
        return False

    rec(0, 0, 0, 0)
    return found, examined, first


def copy_edge_sets(n: int, g: SmallGraph) -> list[tuple[tuple[int, int], ...]]:
    """Distinct edge sets of copies of ``g`` in K_n (one per copy, not per labeling)."""
    from .graph import complete, iter_embeddings

    seen = set()
    for emb in iter_embeddings(complete(n), g):
        key = tuple(sorted((min(emb[a], emb[b]), max(emb[a], emb[b])) for a, b in g.edges()))
        seen.add(key)
    return sorted(seen)


def pairs_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(n), 2))}
