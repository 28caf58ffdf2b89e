"""Slow, obviously-correct re-implementations used only as test oracles.

Nothing here shares code with the package beyond the data types: copies
are found with plain permutations, colorings with itertools.product, and
list choices are brute forced per copy.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx


def edge_list(g):
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1]


def labeled_embeddings(host, pattern) -> int:
    """Injective maps V(pattern) -> V(host) sending edges to edges."""
    pe = edge_list(pattern)
    count = 0
    for img in itertools.permutations(range(host.n), pattern.n):
        if all(host.adj[img[a]] >> img[b] & 1 for a, b in pe):
            count += 1
    return count


def copy_sets(n: int, pattern) -> set[frozenset]:
    pe = edge_list(pattern)
    out = set()
    for img in itertools.permutations(range(n), pattern.n):
        out.add(frozenset((min(img[a], img[b]), max(img[a], img[b])) for a, b in pe))
    return out


def _copy_balanceable(labels_of_copy: tuple[str, ...]) -> bool:
    """Try every colour choice for every edge of the copy."""
    for choice in itertools.product("rb", repeat=len(labels_of_copy)):
        if all(ch in lab for ch, lab in zip(choice, labels_of_copy)):
            r = choice.count("r")
            if abs(2 * r - len(choice)) <= 1:
                return True
    return False


_balanceable = lru_cache(maxsize=None)(_copy_balanceable)


def has_balanced_copy(labels: dict, n: int, pattern, copies=None) -> bool:
    copies = copy_sets(n, pattern) if copies is None else copies
    for s in copies:
        key = tuple(sorted(labels[e] for e in s))
        if _balanceable(key):
            return True
    return False


def naive_max_free(n: int, pattern, alphabet) -> int:
    pairs = list(itertools.combinations(range(n), 2))
    copies = copy_sets(n, pattern)
    best = 0
    # reverse state order: the package walks labels forwards
    for labs in reversed(list(itertools.product(alphabet, repeat=len(pairs)))):
        labels = dict(zip(pairs, labs))
        red = sum("r" in x for x in labs)
        blue = sum("b" in x for x in labs)
        if min(red, blue) <= best:
            continue
        if not has_balanced_copy(labels, n, pattern, copies):
            best = min(red, blue)
    return best


def naive_bal(n: int, pattern) -> int:
    return naive_max_free(n, pattern, ("r", "b"))


def naive_lbal(n: int, pattern) -> int:
    return naive_max_free(n, pattern, ("r", "b", "rb"))


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(edge_list(g))
    return h


def atlas_ex(n: int, forbidden) -> int:
    """ex(n, F) from the networkx atlas of all graphs on at most 7 vertices."""
    assert n <= 7
    fs = [to_nx(f) for f in forbidden]
    fs = [f.subgraph([v for v in f if f.degree(v) > 0]).copy() for f in fs]
    best = 0
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n or h.number_of_edges() <= best:
            continue
        ok = True
        for f in fs:
            gm = nx.algorithms.isomorphism.GraphMatcher(h, f)
            if any(True for _ in gm.subgraph_monomorphisms_iter()):
                ok = False
                break
        if ok:
            best = h.number_of_edges()
    return best


def atlas_half_family(g) -> list[nx.Graph]:
    """Graphs with floor(e/2) edges, no isolates, that are subgraphs of g, up to isomorphism."""
    target = to_nx(g)
    half = target.number_of_edges() // 2
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_edges() != half or h.number_of_nodes() == 0 or min(dict(h.degree()).values()) == 0:
            continue
        gm = nx.algorithms.isomorphism.GraphMatcher(target, h)
        if any(True for _ in gm.subgraph_monomorphisms_iter()):
            out.append(h)
    return out


def max_red_in_cycles(red_rows, n: int, length: int) -> int:
    """Most red-only edges any C_length in K_n can use, by numpy over vertex sets and cyclic orders."""
    import numpy as np

    red = np.zeros((n, n), dtype=np.int8)
    for u in range(n):
        for v in range(n):
            if red_rows[u] >> v & 1:
                red[u, v] = 1
    # cyclic orders of 0..L-1 with 0 first and seq[1] < seq[-1]
    orders = [(0,) + p for p in itertools.permutations(range(1, length)) if p[0] < p[-1]]
    orders = np.array(orders)
    nxt = np.roll(orders, -1, axis=1)
    best = 0
    for subset in itertools.combinations(range(n), length):
        s = np.array(subset)
        a, b = s[orders], s[nxt]
        best = max(best, int(red[a, b].sum(axis=1).max()))
    return best
