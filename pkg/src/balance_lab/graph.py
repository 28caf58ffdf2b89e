"""Small undirected simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit row per vertex, so neighbourhood
intersections and degree counts are single-word operations.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

MAX_VERTICES = 64

INFINITE = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SmallGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must lie in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SmallGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "SmallGraph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def add_edge(self, u: int, v: int) -> "SmallGraph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SmallGraph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "SmallGraph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return SmallGraph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "SmallGraph":
        """Graph whose vertex ``perm[u]`` plays the role of old vertex ``u``."""
        return SmallGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def without_isolates(self) -> "SmallGraph":
        keep = [u for u in range(self.n) if self.adj[u]]
        index = {u: i for i, u in enumerate(keep)}
        return SmallGraph.from_edges(len(keep), ((index[u], index[v]) for u, v in self.edges()))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self) -> str:
        return f"SmallGraph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# named constructors

@dataclass(frozen=True)
class NamedGraph:
    """A named graph family member; ``params`` holds sizes where relevant."""

    tag: str
    params: tuple[int, ...] = ()

    _TAGS = ("cycle", "path", "complete", "4pan", "co4pan", "bull", "cricket", "diamond", "lf")

    def __post_init__(self):
        if self.tag not in self._TAGS:
            raise ValueError(f"unknown graph tag {self.tag!r}")


_FIXED = {
    "4pan": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
    # triangle with a pendant path of length two
    "co4pan": (5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
    # triangle with pendants at two different corners
    "bull": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
    # triangle with two pendants at the same corner
    "cricket": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
    "diamond": (4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
}


def cycle(m: int) -> SmallGraph:
    if m < 3:
        raise ValueError(f"cycles need at least 3 vertices, got {m}")
    return SmallGraph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path(m: int) -> SmallGraph:
    """The path with ``m`` edges (and ``m + 1`` vertices)."""
    if m < 1:
        raise ValueError(f"paths need at least one edge, got {m}")
    return SmallGraph.from_edges(m + 1, [(i, i + 1) for i in range(m)])


def complete(m: int) -> SmallGraph:
    if m < 1:
        raise ValueError(f"complete graphs need at least one vertex, got {m}")
    return SmallGraph.from_edges(m, itertools.combinations(range(m), 2))


def linear_forest(lengths: Sequence[int]) -> SmallGraph:
    """Disjoint union of paths with the given numbers of edges."""
    if not lengths or any(l < 1 for l in lengths):
        raise ValueError(f"path lengths must be positive, got {list(lengths)}")
    edges = []
    offset = 0
    for l in lengths:
        edges.extend((offset + i, offset + i + 1) for i in range(l))
        offset += l + 1
    return SmallGraph.from_edges(offset, edges)


def make_named(spec: NamedGraph) -> SmallGraph:
    if spec.tag == "cycle":
        return cycle(*spec.params)
    if spec.tag == "path":
        return path(*spec.params)
    if spec.tag == "complete":
        return complete(*spec.params)
    if spec.tag == "lf":
        return linear_forest(spec.params)
    n, edges = _FIXED[spec.tag]
    return SmallGraph.from_edges(n, edges)


_TOKEN = re.compile(r"^([cpk])(\d+)$")


def parse_named(token: str) -> NamedGraph:
    """Parse a CLI token such as ``c5``, ``p4``, ``k5``, ``4pan`` or ``lf:3+1+1``."""
    tok = token.strip().lower()
    m = _TOKEN.match(tok)
    if m:
        tag = {"c": "cycle", "p": "path", "k": "complete"}[m.group(1)]
        return NamedGraph(tag, (int(m.group(2)),))
    if tok.startswith("lf:"):
        try:
            parts = tuple(int(x) for x in tok[3:].split("+"))
        except ValueError:
            raise ValueError(f"bad linear forest token {token!r}") from None
        return NamedGraph("lf", parts)
    if tok in _FIXED:
        return NamedGraph(tok)
    raise ValueError(f"unknown named graph {token!r}")


def parse_target(token: str) -> SmallGraph:
    """A named token, or failing that a graph6 string."""
    try:
        return make_named(parse_named(token))
    except ValueError as named_err:
        try:
            return from_graph6(token.strip())
        except ValueError:
            raise named_err from None


# ---------------------------------------------------------------------------
# graph6

def to_graph6(g: SmallGraph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    bitstream = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bitstream += [0] * (-len(bitstream) % 6)
    for k in range(0, len(bitstream), 6):
        chunk = bitstream[k:k + 6]
        out.append(sum(b << (5 - i) for i, b in enumerate(chunk)) + 63)
    return bytes(out).decode("ascii")


def from_graph6(text: str) -> SmallGraph:
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in text]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise ValueError(f"not a graph6 string: {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ValueError("graph6 header for more than 258047 vertices is unsupported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 string encodes {n} vertices, cap is {MAX_VERTICES}")
    need = n * (n - 1) // 2
    if len(body) != -(-need // 6):
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {-(-need // 6)}")
    stream = [d >> (5 - i) & 1 for d in body for i in range(6)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return SmallGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# girth

def girth(g: SmallGraph) -> float | int:
    """Length of a shortest cycle, or ``INFINITE`` for forests.

    BFS from every vertex; the first non-tree edge closing at the root's
    level gives the shortest cycle through that root.
    """
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def distance(g: SmallGraph, source: int, target: int, limit: int | None = None) -> float | int:
    """Shortest path length between two vertices, stopping once ``limit`` is exceeded."""
    if source == target:
        return 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        if limit is not None and d > limit:
            return INFINITE
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        if nxt >> target & 1:
            return d
        seen |= nxt
        frontier = nxt
    return INFINITE


# ---------------------------------------------------------------------------
# embeddings

def search_order(pattern: SmallGraph) -> list[int]:
    """Connectivity-first static order: each vertex is adjacent to an earlier one when possible.

    Within a component, prefer the vertex with most already-placed
    neighbours, then highest degree, then lowest index.
    """
    placed: list[int] = []
    placed_mask = 0
    remaining = set(range(pattern.n))
    while remaining:
        def key(v):
            return (-(pattern.adj[v] & placed_mask).bit_count(), -pattern.degree(v), v)
        v = min(remaining, key=key)
        placed.append(v)
        placed_mask |= 1 << v
        remaining.discard(v)
    return placed


def iter_embeddings(host: SmallGraph, pattern: SmallGraph,
                    fixed: dict[int, int] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every injective edge-preserving map from ``pattern`` into ``host``.

    Maps are tuples indexed by pattern vertex. ``fixed`` pins some pattern
    vertices to given host vertices.
    """
    p = pattern.n
    if p > host.n:
        return
    fixed = dict(fixed or {})
    order = [v for v in fixed] + [v for v in search_order(pattern) if v not in fixed]
    position = {v: i for i, v in enumerate(order)}
    back = [[w for w in bits(pattern.adj[v]) if position[w] < i] for i, v in enumerate(order)]
    img = [-1] * p
    full = (1 << host.n) - 1

    def extend(i: int, used: int):
        if i == p:
            yield tuple(img)
            return
        v = order[i]
        if v in fixed:
            cand = 1 << fixed[v] & ~used
        else:
            cand = full & ~used
        for w in back[i]:
            cand &= host.adj[img[w]]
        for h in bits(cand):
            img[v] = h
            yield from extend(i + 1, used | 1 << h)
        img[v] = -1

    yield from extend(0, 0)


def enumerate_embeddings(host: SmallGraph, pattern: SmallGraph,
                         visitor: Callable[[tuple[int, ...]], object] | None = None) -> int:
    """Visit every labeled embedding; a truthy visitor return value stops the walk.

    Returns the number of embeddings visited.
    """
    count = 0
    for emb in iter_embeddings(host, pattern):
        count += 1
        if visitor is not None and visitor(emb):
            break
    return count


def contains(host: SmallGraph, pattern: SmallGraph, anchor: tuple[int, int] | None = None) -> bool:
    """Whether ``host`` has a subgraph isomorphic to ``pattern``.

    With ``anchor=(u, v)`` only copies using the host edge ``uv`` count.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return False
    if anchor is None:
        return next(iter_embeddings(host, pattern), None) is not None
    u, v = anchor
    for a, b in pattern.edges():
        for x, y in ((a, b), (b, a)):
            if next(iter_embeddings(host, pattern, {x: u, y: v}), None) is not None:
                return True
    return False


def automorphisms(g: SmallGraph) -> list[tuple[int, ...]]:
    return list(iter_embeddings(g, g))


def symmetry_conditions(g: SmallGraph, order: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` such that requiring ``image[a] < image[b]`` keeps one map per copy.

    Built along a stabilizer chain of the automorphism group, taking
    vertices in ``order``.
    """
    auts = automorphisms(g)
    conditions = []
    for v in order:
        if len(auts) == 1:
            break
        orbit = {a[v] for a in auts}
        conditions.extend((v, w) for w in sorted(orbit) if w != v)
        auts = [a for a in auts if a[v] == v]
    return conditions


# ---------------------------------------------------------------------------
# refinement, isomorphism, canonical form

def refine(g: SmallGraph, colors: Sequence[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition finer than ``colors``.

    Colours are renumbered 0.. in order of their signature, so the result is
    isomorphism invariant.
    """
    colors = list(colors)
    while True:
        sigs = [(colors[u], tuple(sorted(colors[w] for w in bits(g.adj[u])))) for u in range(g.n)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def _joint_refine(a: SmallGraph, b: SmallGraph) -> tuple[list[int], list[int]]:
    union = SmallGraph(a.n + b.n, a.adj + tuple(r << a.n for r in b.adj))
    colors = refine(union, [0] * union.n)
    return colors[:a.n], colors[a.n:]


def is_isomorphic(a: SmallGraph, b: SmallGraph) -> bool:
    """Degree refinement on the disjoint union, then backtracking within colour classes."""
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    ca, cb = _joint_refine(a, b)
    if sorted(ca) != sorted(cb):
        return False
    order = search_order(a)
    img = [-1] * a.n

    def extend(i: int, used: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        for h in range(b.n):
            if used >> h & 1 or cb[h] != ca[v]:
                continue
            ok = True
            for w in order[:i]:
                if a.has_edge(v, w) != b.has_edge(h, img[w]):
                    ok = False
                    break
            if ok:
                img[v] = h
                if extend(i + 1, used | 1 << h):
                    return True
        img[v] = -1
        return False

    return extend(0, 0)


def canonical_form(g: SmallGraph) -> SmallGraph:
    """A relabeling of ``g`` that is identical for all isomorphic inputs.

    Individualization-refinement with the lexicographically largest
    adjacency certificate over all leaves; twin vertices are individualized
    once per twin class, which keeps symmetric graphs cheap.
    """
    best: list = [None, None]

    def certificate(colors: list[int]) -> tuple:
        perm = sorted(range(g.n), key=lambda u: colors[u])
        inverse = [0] * g.n
        for new, old in enumerate(perm):
            inverse[old] = new
        rows = tuple(sum(1 << inverse[w] for w in bits(g.adj[old])) for old in perm)
        return rows, inverse

    def search(colors: list[int]):
        colors = refine(g, colors)
        if len(set(colors)) == g.n:
            cert, inverse = certificate(colors)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, inverse
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [u for u in range(g.n) if colors[u] == target]
        seen_twins: list[int] = []
        for u in cell:
            if any(_twins(g, u, w) for w in seen_twins):
                continue
            seen_twins.append(u)
            # individualized vertex sorts before the rest of its cell
            search([2 * c + (0 if w == u else 1) if c == target else 2 * c for w, c in enumerate(colors)])

    if g.n == 0:
        return g
    search([0] * g.n)
    return g.relabel(best[1])


def _twins(g: SmallGraph, u: int, v: int) -> bool:
    mask = ~(1 << u | 1 << v)
    return g.adj[u] & mask == g.adj[v] & mask


def canonical_key(g: SmallGraph) -> str:
    return to_graph6(canonical_form(g))
