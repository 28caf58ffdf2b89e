"""2-list edge colorings of K_n.

Every edge carries a nonempty list: ``"r"``, ``"b"`` or ``"rb"``. The red
class R holds the edges whose list contains r, the blue class B those whose
list contains b; bicolored edges lie in both.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .graph import MAX_VERTICES, bits

LABELS = ("r", "b", "rb")


@dataclass(frozen=True)
class ListColoring:
    """Two bit matrices: ``red[u]`` holds the v with r in L(uv), likewise ``blue``."""

    n: int
    red: tuple[int, ...]
    blue: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"host size must lie in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.red) != self.n or len(self.blue) != self.n:
            raise ValueError("need one red and one blue row per vertex")
        full = (1 << self.n) - 1
        for u in range(self.n):
            others = full & ~(1 << u)
            r, b = self.red[u], self.blue[u]
            if (r | b) & ~others:
                raise ValueError(f"row {u} has a loop or an out-of-range vertex")
            if r | b != others:
                missing = next(bits(others & ~(r | b)))
                raise ValueError(f"edge ({min(u, missing)}, {max(u, missing)}) has an empty list")
            for v in bits(r):
                if not self.red[v] >> u & 1:
                    raise ValueError(f"red rows asymmetric at ({u}, {v})")
            for v in bits(b):
                if not self.blue[v] >> u & 1:
                    raise ValueError(f"blue rows asymmetric at ({u}, {v})")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_labels(cls, n: int, labels: Mapping[tuple[int, int], str], default: str | None = None) -> "ListColoring":
        """Build from ``{(u, v): "r" | "b" | "rb"}``; pairs not listed get ``default``."""
        red = [0] * n
        blue = [0] * n
        seen = set()
        for (u, v), lab in labels.items():
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"invalid edge ({u}, {v}) for n={n}")
            if lab not in LABELS:
                raise ValueError(f"invalid list {lab!r} on edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {key} listed twice")
            seen.add(key)
            _set(red, blue, u, v, lab)
        if default is not None:
            for u, v in itertools.combinations(range(n), 2):
                if (u, v) not in seen:
                    _set(red, blue, u, v, default)
        return cls(n, tuple(red), tuple(blue))

    @classmethod
    def from_classes(cls, n: int, red_edges: Iterable[tuple[int, int]], rb_edges: Iterable[tuple[int, int]] = ()) -> "ListColoring":
        """Red-only ``red_edges``, bicolored ``rb_edges``, every other edge blue-only."""
        labels = {}
        for u, v in red_edges:
            labels[(min(u, v), max(u, v))] = "r"
        for u, v in rb_edges:
            labels[(min(u, v), max(u, v))] = "rb"
        return cls.from_labels(n, labels, default="b")

    @classmethod
    def uniform(cls, n: int, label: str) -> "ListColoring":
        return cls.from_labels(n, {}, default=label)

    # -- queries -----------------------------------------------------------

    def label(self, u: int, v: int) -> str:
        r = self.red[u] >> v & 1
        b = self.blue[u] >> v & 1
        return "rb" if r and b else "r" if r else "b"

    def pairs(self):
        return itertools.combinations(range(self.n), 2)

    def edges_with(self, label: str) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.pairs() if self.label(u, v) == label]

    def red_only(self) -> tuple[int, ...]:
        return tuple(r & ~b for r, b in zip(self.red, self.blue))

    def blue_only(self) -> tuple[int, ...]:
        return tuple(b & ~r for r, b in zip(self.red, self.blue))

    def bicolored_rows(self) -> tuple[int, ...]:
        return tuple(r & b for r, b in zip(self.red, self.blue))

    def is_partition(self) -> bool:
        return not any(self.bicolored_rows())

    def with_label(self, u: int, v: int, label: str) -> "ListColoring":
        red, blue = list(self.red), list(self.blue)
        _set(red, blue, u, v, label)
        return ListColoring(self.n, tuple(red), tuple(blue))

    def swapped(self) -> "ListColoring":
        return ListColoring(self.n, self.blue, self.red)

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [{"u": u, "v": v, "list": self.label(u, v)} for u, v in self.pairs()]}

    def to_json(self, **meta) -> str:
        d = self.to_dict()
        if meta:
            d["meta"] = meta
        return json.dumps(d)

    @classmethod
    def from_dict(cls, data: Mapping) -> "ListColoring":
        n = int(data["n"])
        labels = {}
        for item in data["edges"]:
            u, v = int(item["u"]), int(item["v"])
            if u >= v:
                raise ValueError(f"edge entries need u < v, got ({u}, {v})")
            labels[(u, v)] = item["list"]
        if len(labels) != comb(n, 2):
            raise ValueError(f"coloring lists {len(labels)} pairs, K_{n} has {comb(n, 2)}")
        return cls.from_labels(n, labels)

    @classmethod
    def from_json(cls, text: str) -> "ListColoring":
        return cls.from_dict(json.loads(text))


def _set(red: list[int], blue: list[int], u: int, v: int, label: str) -> None:
    for rows, on in ((red, "r" in label), (blue, "b" in label)):
        if on:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)


@dataclass(frozen=True)
class ColorStats:
    red_size: int
    blue_size: int
    bicolored: int
    # min(|R|, |B|) minus half of binomial(n, 2), kept exact
    excess: Fraction


def stats(c: ListColoring) -> ColorStats:
    red = sum(r.bit_count() for r in c.red) // 2
    blue = sum(b.bit_count() for b in c.blue) // 2
    bic = sum(x.bit_count() for x in c.bicolored_rows()) // 2
    return ColorStats(red, blue, bic, min(red, blue) - Fraction(comb(c.n, 2), 2))


def restrict_to_2coloring(c: ListColoring, k: int) -> ListColoring:
    """A partition R' ⊔ B' with R' ⊆ R, B' ⊆ B and both classes above ``k``.

    If the red-only edges alone exceed ``k`` they form R'; otherwise R' is
    the red-only edges topped up with bicolored edges (in lexicographic
    order) to exactly ``k + 1`` edges and B' is everything else.
    """
    s = stats(c)
    total = comb(c.n, 2)
    if not s.red_size > k:
        raise ValueError(f"need |R| > k, got |R|={s.red_size}, k={k}")
    if not s.blue_size > k:
        raise ValueError(f"need |B| > k, got |B|={s.blue_size}, k={k}")
    if not 2 * k < total:
        raise ValueError(f"need k < binomial(n,2)/2, got k={k}, binomial(n,2)={total}")
    red_only = c.red_only()
    if sum(r.bit_count() for r in red_only) // 2 > k:
        return ListColoring(c.n, red_only, c.blue)
    want = k + 1 - sum(r.bit_count() for r in red_only) // 2
    red = list(red_only)
    for u, v in c.pairs():
        if want == 0:
            break
        if c.label(u, v) == "rb":
            red[u] |= 1 << v
            red[v] |= 1 << u
            want -= 1
    full = (1 << c.n) - 1
    blue = [full & ~(1 << u) & ~red[u] for u in range(c.n)]
    out = ListColoring(c.n, tuple(red), tuple(blue))
    if not stats(out).blue_size > k:
        raise ValueError(f"|B'| = binomial(n,2) - k - 1 = {total - k - 1} is not above k={k}")
    return out


def fix_bicolored_balanced(c: ListColoring) -> ListColoring:
    """Resolve every bicolored edge to a single colour.

    Edges are taken in lexicographic order and alternate between the
    classes, starting with whichever of red-only/blue-only is smaller
    (red on a tie).
    """
    red_only = sum(r.bit_count() for r in c.red_only()) // 2
    blue_only = sum(b.bit_count() for b in c.blue_only()) // 2
    to_red = red_only <= blue_only
    labels = {}
    for u, v in c.pairs():
        lab = c.label(u, v)
        if lab == "rb":
            lab = "r" if to_red else "b"
            to_red = not to_red
        labels[(u, v)] = lab
    return ListColoring.from_labels(c.n, labels)


DOT_COLORS = {"r": "red", "b": "blue", "rb": "purple"}


def to_dot(c: ListColoring, witness_edges: Iterable[tuple[int, int]] = ()) -> str:
    """DOT text for the coloring; witness edges are drawn with ``penwidth=2``."""
    marked = {(min(u, v), max(u, v)) for u, v in witness_edges}
    lines = ["graph coloring {"]
    lines.extend(f"  {u};" for u in range(c.n))
    for u, v in c.pairs():
        attrs = f"color={DOT_COLORS[c.label(u, v)]}"
        if (u, v) in marked:
            attrs += ", penwidth=2"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
