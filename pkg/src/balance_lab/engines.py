"""Constructive finders for balanced cycles.

Each finder builds a candidate cycle from local structure (a balanced path,
a two-coloured K_2t pattern, or detours around a balanced C_{4k-1}) and
checks every colour it relies on. When the structure is not there it falls
back to the generic search and says so in the ``case`` label.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coloring import ListColoring, fix_bicolored_balanced
from .graph import SmallGraph, bits, cycle, path
from .search import BalancedWitness, find_balanced_copy, verify_witness

TYPE_A = "A"
TYPE_B = "B"


class EngineError(RuntimeError):
    """A construction produced a cycle that does not verify; always a bug."""


@dataclass(frozen=True)
class PatternWitness:
    """A K_2t on ``x_set`` ∪ ``y_set``.

    Type A: E(X) in the first colour, E(Y) ∪ E(X,Y) in the second.
    Type B: E(X) ∪ E(Y) in the first colour, E(X,Y) in the second.
    The first colour is red, or blue when ``swapped``.
    """

    x_set: tuple[int, ...]
    y_set: tuple[int, ...]
    kind: str
    swapped: bool

    @property
    def t(self) -> int:
        return len(self.x_set)

    def vertices(self) -> frozenset[int]:
        return frozenset(self.x_set) | frozenset(self.y_set)

    def to_dict(self) -> dict:
        return {"x": list(self.x_set), "y": list(self.y_set), "type": self.kind, "swapped": self.swapped}


@dataclass(frozen=True)
class EngineResult:
    target: SmallGraph
    case: str
    witness: BalancedWitness | None
    pattern: PatternWitness | None = None

    @property
    def via_fallback(self) -> bool:
        return self.case == "fallback"

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "fallback": self.via_fallback,
            "witness": None if self.witness is None else self.witness.to_dict(self.target),
            "pattern": None if self.pattern is None else self.pattern.to_dict(),
        }


class _Roles:
    """Colour queries on a strict 2-coloring, with red and blue exchanged when ``swapped``."""

    def __init__(self, c2: ListColoring, swapped: bool = False):
        self.c2 = c2
        self.swapped = swapped
        self.red_rows = c2.blue if swapped else c2.red
        self.blue_rows = c2.red if swapped else c2.blue

    def red(self, u: int, v: int) -> bool:
        return bool(self.red_rows[u] >> v & 1)

    def blue(self, u: int, v: int) -> bool:
        return bool(self.blue_rows[u] >> v & 1)

    def actual(self, role: str) -> str:
        """Actual colour letter of a role colour ``"r"`` / ``"b"``."""
        if not self.swapped:
            return role
        return "b" if role == "r" else "r"


def cycle_witness(c: ListColoring, c2: ListColoring, seq: list[int],
                  forced: dict[tuple[int, int], str] | None = None) -> BalancedWitness:
    """Witness for the cycle visiting ``seq`` in order; edge colours come from ``c2`` unless forced."""
    forced = {(min(u, v), max(u, v)): col for (u, v), col in (forced or {}).items()}
    pattern = cycle(len(seq))
    colors = []
    for a, b in pattern.edges():
        u, v = seq[a], seq[b]
        key = (min(u, v), max(u, v))
        colors.append(forced.get(key) or c2.label(u, v))
    return BalancedWitness(tuple(seq), tuple(colors))


def _checked(c: ListColoring, seq: list[int], w: BalancedWitness, case: str) -> BalancedWitness:
    if len(set(seq)) != len(seq) or not verify_witness(c, cycle(len(seq)), w):
        raise EngineError(f"{case} construction did not verify: {seq}")
    return w


# ---------------------------------------------------------------------------
# odd cycles from balanced paths

def odd_cycle_from_path(c: ListColoring, p: BalancedWitness) -> BalancedWitness:
    """Close a balanced even path into an odd cycle; the closing edge takes any colour on its list."""
    length = len(p.colors)
    if length < 2 or length % 2:
        raise ValueError(f"need a path with a positive even number of edges, got {length}")
    if not verify_witness(c, path(length), p):
        raise ValueError("not a valid path witness in this coloring")
    r, b = p.counts()
    if r != b:
        raise ValueError(f"path is not balanced: {r} red, {b} blue")
    seq = list(p.mapping)
    ends = (seq[0], seq[-1])
    close = "r" if c.red[ends[0]] >> ends[1] & 1 else "b"
    path_cols = {}
    for (a, bb), col in zip(path(length).edges(), p.colors):
        u, v = p.mapping[a], p.mapping[bb]
        path_cols[(min(u, v), max(u, v))] = col
    path_cols[(min(ends), max(ends))] = close
    pattern = cycle(length + 1)
    colors = tuple(path_cols[(min(seq[a], seq[bb]), max(seq[a], seq[bb]))] for a, bb in pattern.edges())
    w = BalancedWitness(tuple(seq), colors)
    assert verify_witness(c, pattern, w)
    return w


def path_from_odd_cycle(c: ListColoring, w: BalancedWitness) -> BalancedWitness:
    """Drop one edge of the majority colour, leaving a path with equal colour counts."""
    length = len(w.colors)
    pattern = cycle(length)
    if not verify_witness(c, pattern, w):
        raise ValueError("not a valid balanced cycle witness")
    r, b = w.counts()
    if r == b:
        raise ValueError("colour counts are equal; there is no majority edge to delete")
    major = "r" if r > b else "b"
    seq = list(w.mapping)
    col = {}
    for (a, bb), x in zip(pattern.edges(), w.colors):
        col[(min(seq[a], seq[bb]), max(seq[a], seq[bb]))] = x
    for j in range(length):
        u, v = seq[j], seq[(j + 1) % length]
        if col[(min(u, v), max(u, v))] == major:
            break
    new_seq = seq[j + 1:] + seq[:j + 1]
    ppat = path(length - 1)
    colors = tuple(col[(min(new_seq[a], new_seq[bb]), max(new_seq[a], new_seq[bb]))] for a, bb in ppat.edges())
    out = BalancedWitness(tuple(new_seq), colors)
    assert verify_witness(c, ppat, out) and out.counts()[0] == out.counts()[1]
    return out


def find_balanced_odd_cycle(c: ListColoring, k: int, alpha: int, workers: int | None = None) -> EngineResult:
    """Balanced C_{4k+alpha}, obtained by closing a balanced path with one edge fewer.

    No balanced path means no balanced cycle either (deleting a majority
    edge of a balanced odd cycle leaves one), so ``none`` is exact.
    """
    if alpha not in (-1, 1) or k < 1:
        raise ValueError(f"need k >= 1 and alpha in {{-1, 1}}, got k={k}, alpha={alpha}")
    length = 4 * k + alpha
    target = cycle(length)
    p = find_balanced_copy(c, path(length - 1), workers=workers)
    if p is None:
        return EngineResult(target, "none", None)
    return EngineResult(target, "path-closure", odd_cycle_from_path(c, p))


# ---------------------------------------------------------------------------
# unavoidable patterns

def _cliques(rows, size: int, cand: int, budget: list[int]):
    """Yield size-subsets of ``cand`` that are cliques in ``rows``, lexicographically."""
    if size == 0:
        yield ()
        return
    for v in bits(cand):
        budget[0] -= 1
        if budget[0] < 0:
            return
        rest = cand & rows[v] & ~((1 << (v + 1)) - 1)
        if (rest.bit_count()) < size - 1:
            continue
        for tail in _cliques(rows, size - 1, rest, budget):
            yield (v,) + tail


def find_pattern(c2: ListColoring, t: int, budget: int | None = 1_000_000) -> PatternWitness | None:
    """A type-A or type-B K_2t in a strict 2-coloring, or None.

    The search is exhaustive: enumerate t-cliques X in the first colour and
    look for a t-clique Y inside the common second-colour neighbourhood of X.
    Type B is tried before type A, unswapped before swapped. ``budget``
    caps the number of clique-search nodes; None means unlimited.
    """
    if not c2.is_partition():
        raise ValueError("find_pattern needs a strict 2-coloring; resolve bicolored edges first")
    if t < 1 or 2 * t > c2.n:
        return None
    nodes = [budget if budget is not None else float("inf")]
    full = (1 << c2.n) - 1
    for kind in (TYPE_B, TYPE_A):
        for swapped in (False, True):
            roles = _Roles(c2, swapped)
            y_rows = roles.red_rows if kind == TYPE_B else roles.blue_rows
            for x in _cliques(roles.red_rows, t, full, nodes):
                common = full
                for v in x:
                    common &= roles.blue_rows[v]
                if kind == TYPE_B:
                    # Y must not repeat the pair (X, Y) as (Y, X)
                    common &= ~((1 << (x[0] + 1)) - 1)
                if common.bit_count() < t:
                    continue
                y = next(_cliques(y_rows, t, common, nodes), None)
                if y is not None:
                    return PatternWitness(x, y, kind, swapped)
            if nodes[0] < 0:
                return None
    return None


def _take(pool, exclude, count):
    out = [v for v in pool if v not in exclude][:count]
    if len(out) < count:
        raise EngineError("pattern too small for the construction")
    return out


def _alternate(a_side: list[int], b_side: list[int], length: int) -> list[int]:
    """Interleave a1, b1, a2, b2, ... to ``length`` vertices."""
    out = []
    for i in range(length):
        out.append(a_side[i // 2] if i % 2 == 0 else b_side[i // 2])
    return out


def _case_one(c, c2, pat: PatternWitness, k: int) -> tuple[str, BalancedWitness]:
    xs = list(pat.x_set[: 2 * k + 2])
    ys = list(pat.y_set[: 2 * k])
    seq = xs + ys
    return "case1", _checked(c, seq, cycle_witness(c, c2, seq), "case1")


def _case_two(c, c2, roles: _Roles, pat, e, k) -> tuple[str, BalancedWitness]:
    u, v = e
    X, Y = list(pat.x_set), list(pat.y_set)
    if (u in X) == (v in X):
        # Subcase 2.1: e inside one side; that side plays X
        side, other = (X, Y) if u in X else (Y, X)
        ys = _take(other, set(), 2 * k + 2)
        back_y = _take(other, set(ys), k - 1)
        back_x = _take(side, {u, v}, k - 1)
        seq = [u, v] + ys + _alternate(back_x, back_y, 2 * k - 2)
        w = cycle_witness(c, c2, seq, {e: roles.actual("b")})
        return "case2.1", _checked(c, seq, w, "case2.1")
    # Subcase 2.2: e crosses; u's side plays X
    if u not in X:
        u, v = v, u
    side, other = (X, Y) if u in X else (Y, X)
    xs = _take(side, {u}, k + 1)
    ys = _take(other, {v}, k)
    blue = _alternate(xs, ys, 2 * k + 1)
    red_inner = _take(side, set(xs) | {u}, 2 * k - 1)
    seq = [u, v] + blue + red_inner
    w = cycle_witness(c, c2, seq, {e: roles.actual("r")})
    return "case2.2", _checked(c, seq, w, "case2.2")


def _case_three(c, c2, roles: _Roles, pat, e, k) -> tuple[str, BalancedWitness]:
    u, v = e
    hv = pat.vertices()
    if u not in hv:
        u, v = v, u
    side, other = (list(pat.x_set), list(pat.y_set)) if u in pat.x_set else (list(pat.y_set), list(pat.x_set))
    red_path = [u] + _take(side, {u}, 2 * k)
    ys = _take(other, set(), k)
    xs = _take(side, set(red_path), k)
    seq = red_path + _alternate(ys, xs, 2 * k) + [v]
    w_vertex = seq[-2]
    e_col = "b" if c2.label(v, w_vertex) == "r" else "r"
    wit = cycle_witness(c, c2, seq, {e: e_col})
    return "case3", _checked(c, seq, wit, "case3")


def _case_four(c, c2, roles: _Roles, pat, e, k) -> tuple[str, BalancedWitness]:
    u, v = e
    sides = ((list(pat.x_set), list(pat.y_set)), (list(pat.y_set), list(pat.x_set)))
    for side, other in sides:
        for p, q in ((u, v), (v, u)):
            for x in side:
                if roles.red(p, x):
                    # Subcase 4.1: w q p x, red path from x, blue zigzag back to w
                    red_path = [x] + _take(side, {x}, 2 * k - 1)
                    ys = _take(other, set(), k)
                    xs = _take(side, set(red_path), k)
                    seq = [q, p] + red_path + _alternate(ys, xs, 2 * k)
                    w_vertex = seq[-1]
                    e_col = "b" if c2.label(q, w_vertex) == "r" else "r"
                    wit = cycle_witness(c, c2, seq, {e: e_col})
                    return "case4.1", _checked(c, seq, wit, "case4.1")
    # Subcase 4.2: every edge from u, v into the pattern has the second colour
    side, other = list(pat.x_set), list(pat.y_set)
    red_path = _take(side, set(), 2 * k + 2)
    if k == 1:
        seq = [v, u] + red_path
    else:
        ys = _take(other, set(), k - 1)
        xs = _take(side, set(red_path), k - 1)
        # zigzag r_{2k+1}, y, x, ..., y, x' with x' last
        zig = _alternate(ys, xs, 2 * k - 2)
        seq = [v, u] + red_path + zig
    wit = cycle_witness(c, c2, seq, {e: roles.actual("b")})
    return "case4.2", _checked(c, seq, wit, "case4.2")


def find_balanced_c4k2(c: ListColoring, k: int, t: int | None = None,
                       pattern_budget: int | None = 1_000_000, workers: int | None = None) -> EngineResult:
    """Balanced C_{4k+2} from a type-A/B pattern and one bicolored edge, else generic search.

    Steps: resolve bicolored edges, find a pattern with t = 3k + 1, take
    the lowest bicolored edge e and dispatch on the pattern type and where
    e sits relative to the pattern.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    t = 3 * k + 1 if t is None else t
    if t < 3 * k + 1:
        raise ValueError(f"constructions need t >= 3k + 1 = {3 * k + 1}, got {t}")
    target = cycle(4 * k + 2)
    c2 = fix_bicolored_balanced(c)
    pat = find_pattern(c2, t, budget=pattern_budget)
    rb = c.edges_with("rb")
    if pat is not None:
        roles = _Roles(c2, pat.swapped)
        if pat.kind == TYPE_A:
            case, w = _case_one(c, c2, pat, k)
            return EngineResult(target, case, w, pat)
        if rb:
            e = rb[0]
            hv = pat.vertices()
            inside = (e[0] in hv) + (e[1] in hv)
            handler = {2: _case_two, 1: _case_three, 0: _case_four}[inside]
            case, w = handler(c, c2, roles, pat, e, k)
            return EngineResult(target, case, w, pat)
    w = find_balanced_copy(c, target, workers=workers)
    return EngineResult(target, "fallback" if w is not None else "none", w, pat)


# ---------------------------------------------------------------------------
# C_4k from a balanced C_{4k-1}

def _balanced(c2: ListColoring, seq: list[int]) -> bool:
    L = len(seq)
    reds = sum(c2.label(seq[i], seq[(i + 1) % L]) == "r" for i in range(L))
    return 2 * reds == L


def _orient(c2: ListColoring, seq: list[int]) -> tuple[_Roles, list[int]] | None:
    """Roles with blue the majority, and ``seq`` rotated to start at u0 (red, blue, blue)."""
    L = len(seq)
    reds = sum(c2.label(seq[i], seq[(i + 1) % L]) == "r" for i in range(L))
    roles = _Roles(c2, swapped=2 * reds > L)
    for i in range(L):
        a, b, cc, d = (seq[(i + j) % L] for j in range(4))
        if roles.red(a, b) and roles.blue(b, cc) and roles.blue(cc, d):
            return roles, seq[i:] + seq[:i]
    return None


def _glue(roles: _Roles, big: list[int], others: list[int], k: int) -> list[int] | None:
    """Red zigzag v1 w1 ... v_k between ``big`` and ``others``, a red cherry v w v', blue return in ``big``."""
    big_set = set(big)
    red_to = {x: [y for y in big if roles.red(x, y)] for x in others}
    red_from = {y: [x for x in others if roles.red(x, y)] for y in big}
    vs: list[int] = []
    ws: list[int] = []

    def finish() -> list[int] | None:
        used_w = set(ws)
        used_v = set(vs)
        for w in others:
            if w in used_w:
                continue
            nb = [y for y in red_to[w] if y not in used_v]
            if len(nb) < 2:
                continue
            v, v2 = nb[0], nb[1]
            rest = [y for y in big if y not in used_v and y not in (v, v2)]
            if len(rest) < 2 * k - 2:
                continue
            zigzag = _alternate(vs, ws, 2 * k - 1)
            return zigzag + [v, w, v2] + rest[: 2 * k - 2]
        return None

    def grow() -> list[int] | None:
        if len(vs) == k:
            return finish()
        if not vs:
            starts = big
        else:
            starts = None
        if starts is not None:
            for y in starts:
                vs.append(y)
                got = grow()
                if got:
                    return got
                vs.pop()
            return None
        last = vs[-1]
        for w in red_from[last]:
            if w in ws:
                continue
            for y in red_to[w]:
                if y in vs:
                    continue
                ws.append(w)
                vs.append(y)
                got = grow()
                if got:
                    return got
                vs.pop()
                ws.pop()
        return None

    if len(big_set) < 3 * k:
        return None
    return grow()


def c4k_from_cycle(c: ListColoring, c2: ListColoring, seq: list[int], k: int) -> tuple[str, BalancedWitness] | None:
    """Turn a balanced C_{4k-1} (vertex order ``seq``) into a balanced C_4k, or None."""
    oriented = _orient(c2, seq)
    if oriented is None:
        return None
    roles, seq = oriented
    L = len(seq)
    u0, u1, u2, u3 = seq[0], seq[1], seq[2], seq[3 % L]
    on_cycle = set(seq)
    outside = [v for v in range(c2.n) if v not in on_cycle]

    def attempt(new_seq, case):
        if _balanced(c2, new_seq):
            return case, _checked(c, new_seq, cycle_witness(c, c2, new_seq), case)
        return None

    def detour(j, v):
        return seq[: j + 1] + [v] + seq[j + 1:]

    def double(j, v, v2):
        return seq[: j + 1] + [v, v2] + seq[j + 2:]

    X = [v for v in outside if roles.red(u1, v)]
    Y = [v for v in outside if roles.blue(u1, v)]
    for v in outside:
        if v in Y:
            tries = ((1, "claim-bb"), (2 % L, "claim-bb"))
        else:
            tries = ((1, "claim-x"), (0, "claim-x"))
        for j, case in tries:
            got = attempt(detour(j, v), case)
            if got:
                return got
    for v, v2 in itertools.permutations(X, 2):
        if roles.red(v, v2):
            got = attempt(double(0, v, v2), "claim-xy")
            if got:
                return got
    for v, v2 in itertools.permutations(Y, 2):
        if roles.red(v, v2):
            got = attempt(double(1, v, v2), "claim-xy")
            if got:
                return got
    for v in X:
        for v2 in Y:
            if roles.blue(v, v2):
                got = attempt(double(1, v, v2), "claim-xy")
                if got:
                    return got

    # every detour failed: the forced structure must now hold; re-check it
    structure = (
        all(roles.blue(u2, v) and roles.blue(u3, v) for v in Y)
        and all(roles.blue(u0, v) and roles.red(u2, v) for v in X)
        and all(roles.blue(a, b) for a, b in itertools.combinations(X, 2))
        and all(roles.blue(a, b) for a, b in itertools.combinations(Y, 2))
        and all(roles.red(a, b) for a in X for b in Y)
    )
    if not structure:
        return None
    for big, small in ((Y, X), (X, Y)) if len(X) <= len(Y) else ((X, Y), (Y, X)):
        if len(small) >= k and len(big) >= 3 * k:
            blue_path = big[: 2 * k + 1]
            back = _alternate(small[:k], big[2 * k + 1: 3 * k], 2 * k - 1)
            new_seq = blue_path + back
            got = attempt(new_seq, "structure-long-path")
            if got:
                return got
    for big, small in ((Y, X), (X, Y)) if len(X) <= len(Y) else ((X, Y), (Y, X)):
        if len(small) < k:
            others = [v for v in range(c2.n) if v not in set(big)]
            glued = _glue(roles, big, others, k)
            if glued is not None:
                got = attempt(glued, "structure-glue")
                if got:
                    return got
    return None


def find_balanced_c4k(c: ListColoring, k: int, workers: int | None = None) -> EngineResult:
    """Balanced C_4k by extending a balanced C_{4k-1}; generic search when that route fails.

    Bicolored edges, if any, are resolved first; witnesses remain valid for
    the original list coloring.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    target = cycle(4 * k)
    c2 = c if c.is_partition() else fix_bicolored_balanced(c)
    odd = find_balanced_odd_cycle(c2, k, -1, workers=workers)
    if odd.witness is not None:
        got = c4k_from_cycle(c, c2, list(odd.witness.mapping), k)
        if got is not None:
            case, w = got
            return EngineResult(target, case, w)
    w = find_balanced_copy(c, target, workers=workers)
    return EngineResult(target, "fallback" if w is not None else "none", w)
