import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from balance_lab.formulas import (
    K5,
    CycleFormulaInput,
    bal_odd_cycle,
    bicolored_upper_bound,
    c4k_bounds,
    format_rational,
    girth6_asymptotic,
    k5_bounds,
    linear_forest_ex,
    odd_cycle_threshold,
    structural_upper_bound,
)


def test_bal_odd_examples():
    assert bal_odd_cycle(CycleFormulaInput(50, 1, 1)) == 1
    assert bal_odd_cycle(CycleFormulaInput(50, 1, -1)) == 0
    assert bal_odd_cycle(CycleFormulaInput(100, 2, 1)) == 100


@given(st.integers(1, 10), st.sampled_from([-1, 1]), st.integers(1, 500))
def test_bal_odd_is_integer(k, alpha, n):
    assert bal_odd_cycle(CycleFormulaInput(n, k, alpha)).denominator == 1


def test_formula_input_validation():
    with pytest.raises(ValueError):
        CycleFormulaInput(10, 0)
    with pytest.raises(ValueError):
        CycleFormulaInput(10, 1, 0)
    assert CycleFormulaInput(5, 1).below_threshold
    assert CycleFormulaInput(9, 1).below_threshold
    assert not CycleFormulaInput(10, 1).below_threshold
    assert odd_cycle_threshold(1) == Fraction(9, 2) + Fraction(13, 4) + Fraction(49, 32)


def test_c4k_bounds_examples():
    assert c4k_bounds(20, 2) == (19, 74)
    assert c4k_bounds(20, 1) == (0, 15)
    assert c4k_bounds(12, 3)[0] == 20
    with pytest.raises(ValueError):
        c4k_bounds(7, 2)


@given(st.integers(1, 10), st.integers(0, 1000))
def test_c4k_bounds_ordered(k, extra):
    lo, hi = c4k_bounds(4 * k + extra, k)
    assert lo < hi


@given(st.integers(10, 1000))
def test_linear_forest_ex_examples(n):
    assert linear_forest_ex(n, [6]) == 2 * n - 3
    assert linear_forest_ex(n, [3, 3]) == n
    assert linear_forest_ex(n, [2]) == 0


def test_k5_constants():
    assert abs(K5.c - 0.016) < 1e-3
    assert abs(K5.upper_coeff - 0.177) < 1e-3
    lo, hi = k5_bounds(10 ** 4, 0.0)
    assert math.isclose(lo - 10 ** 4 * (10 ** 4 - 1) / 4, K5.c * 10 ** 6, rel_tol=1e-12)
    assert hi > lo
    with pytest.raises(ValueError):
        k5_bounds(10, 1.0)


def test_structural_examples():
    assert structural_upper_bound(5, 4) == 7
    assert structural_upper_bound(6, 6) == Fraction(21, 2)
    assert structural_upper_bound(8, 9) == 19
    with pytest.raises(ValueError):
        structural_upper_bound(5, -1)


def test_bicolored_bound_and_format():
    assert bicolored_upper_bound(5, 4) == 6
    assert format_rational(Fraction(21, 2)) == "21/2"
    assert format_rational(7) == "7"
    assert math.isclose(girth6_asymptotic(8), 8.0)
