"""Closed-form bounds and constants, evaluated exactly where they are rational."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


def half_pairs(n: int) -> Fraction:
    return Fraction(comb(n, 2), 2)


def odd_cycle_threshold(k: int) -> Fraction:
    """Smallest host size the odd-cycle and C_4k results are stated for."""
    return Fraction(9, 2) * k * k + Fraction(13, 4) * k + Fraction(49, 32)


@dataclass(frozen=True)
class CycleFormulaInput:
    n: int
    k: int
    alpha: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.alpha not in (-1, 1):
            raise ValueError(f"alpha must be +1 or -1, got {self.alpha}")

    @property
    def below_threshold(self) -> bool:
        return self.n < odd_cycle_threshold(self.k)


def bal_odd_cycle(inp: CycleFormulaInput) -> Fraction:
    """Predicted balancing number of C_{4k+alpha}: (k-1)n - (k^2 - k - 1 - alpha)/2."""
    k, a = inp.k, inp.alpha
    return (k - 1) * inp.n - Fraction(k * k - k - 1 - a, 2)


def c4k_bounds(n: int, k: int) -> tuple[int, int]:
    """(lower, strict upper) for the balancing number of C_4k."""
    if n < 4 * k:
        raise ValueError(f"need n >= 4k, got n={n}, k={k}")
    return (k - 1) * n - (k - 1) ** 2, (k - 1) * n + 12 * k * k + 3 * k


def linear_forest_ex(n: int, orders: Sequence[int]) -> int:
    """Extremal number of a linear forest with component orders ``orders``.

    With S the sum of floor(v_i / 2): (S-1)(n-S+1) + C(S-1, 2) + c, where
    c = 1 iff every component order is odd. Valid for large n only; the
    value is returned regardless.
    """
    s = sum(v // 2 for v in orders)
    c = 1 if all(v % 2 for v in orders) else 0
    return (s - 1) * (n - s + 1) + comb(max(s - 1, 0), 2) + c


@dataclass(frozen=True)
class K5Constants:
    c: float = 2 * ((math.sqrt(2) - 1) / (2 * math.sqrt(2))) ** 2.5
    upper_coeff: float = 1 / (4 * math.sqrt(2))


K5 = K5Constants()


def k5_bounds(n: int, epsilon: float) -> tuple[float, float]:
    if not 0 <= epsilon < 1:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon}")
    base = comb(n, 2) / 2
    growth = n ** 1.5
    return base + (1 - epsilon) * K5.c * growth, base + (1 + epsilon) * K5.upper_coeff * growth


def structural_upper_bound(n: int, exval: int) -> Fraction:
    """Half of binomial(n, 2) plus ceil(exval / 2)."""
    if exval < 0:
        raise ValueError("extremal number must be non-negative")
    return half_pairs(n) + (exval + 1) // 2


def bicolored_upper_bound(n: int, b: int) -> Fraction:
    """List balancing bound when every coloring with b bicolored edges has a balanced copy."""
    return half_pairs(n) + (b + 1) // 2 - 1


def girth6_asymptotic(n: int) -> float:
    """Leading term n^{3/2} / (2 sqrt 2) of ex(n, {C3, C4, C5})."""
    return n ** 1.5 / (2 * math.sqrt(2))


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
