import json
from math import comb

import pytest

from balance_lab.coloring import stats
from balance_lab.extremal import ex_exact, half_family
from balance_lab.formulas import CycleFormulaInput, bal_odd_cycle, bicolored_upper_bound, structural_upper_bound
from balance_lab.graph import complete, cycle, path
from balance_lab.oracle import (
    VerifyConfig,
    bal_exact,
    lbal_exact,
    max_bicolored_without_copy,
    randomized_verify,
    report_json,
    splitmix64,
    trial_seeds,
)
from balance_lab.search import find_balanced_copy

from naive_oracles import naive_bal, naive_lbal

# (bal, lbal) computed by the naive product-enumeration oracle
FROZEN = {
    (4, "c3"): (0, 0),
    (5, "c3"): (0, 0),
    (5, "c4"): (1, 1),
    (5, "k4"): (4, 4),
    (5, "k5"): (4, 4),
    (4, "c4"): (1, 1),
    (5, "p2"): (0, 0),
}
GRAPHS = {"c3": cycle(3), "c4": cycle(4), "k4": complete(4), "k5": complete(5), "p2": path(2)}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_values(key):
    n, name = key
    g = GRAPHS[name]
    assert (bal_exact(n, g).value, lbal_exact(n, g).value) == FROZEN[key]


@pytest.mark.parametrize("n,name", [(4, "c3"), (5, "c3"), (5, "c4"), (5, "k4")])
def test_agrees_with_naive(n, name):
    g = GRAPHS[name]
    assert bal_exact(n, g).value == naive_bal(n, g)
    assert lbal_exact(n, g).value == naive_lbal(n, g)


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_bal_le_lbal_and_equality_below_half(key):
    n, name = key
    b = bal_exact(n, GRAPHS[name]).value
    lb = lbal_exact(n, GRAPHS[name]).value
    assert b <= lb
    if 2 * b < comb(n, 2):
        assert b == lb


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_witness_colorings_recheck(key):
    n, name = key
    g = GRAPHS[name]
    for res in (bal_exact(n, g), lbal_exact(n, g)):
        if res.witness_coloring is None:
            continue
        s = stats(res.witness_coloring)
        assert min(s.red_size, s.blue_size) == res.value
        assert find_balanced_copy(res.witness_coloring, g, use_bound=False) is None


def test_bal_witness_is_strict():
    res = bal_exact(5, cycle(4))
    assert res.witness_coloring.is_partition()


def test_single_edge_is_zero():
    assert bal_exact(5, path(1)).value == 0
    assert lbal_exact(4, path(1)).value == 0
    assert bal_exact(5, path(1)).witness_coloring is None


def test_c3_at_six_against_formula():
    # small-n value and large-n prediction recorded side by side
    assert bal_exact(6, cycle(3)).value == 0
    assert bal_odd_cycle(CycleFormulaInput(6, 1, -1)) == 0


def test_k5_at_five_is_below_half():
    # with |R|, |B| >= 5 the only copy has at most 5 red-only and 5 blue-only edges
    assert lbal_exact(5, complete(5)).value == 4 < comb(5, 2) / 2


def test_caps():
    with pytest.raises(ValueError, match="24"):
        bal_exact(8, cycle(3))
    with pytest.raises(ValueError, match="15"):
        lbal_exact(7, cycle(3))
    with pytest.raises(ValueError):
        bal_exact(4, complete(1))


def test_structural_bound_dominates_lbal():
    ex5 = ex_exact(5, half_family(complete(5)))
    assert structural_upper_bound(5, ex5) >= lbal_exact(5, complete(5)).value


@pytest.mark.parametrize("n,name", [(5, "c4"), (5, "k4"), (5, "k5"), (4, "c3")])
def test_bicolored_count_bound(n, name):
    g = GRAPHS[name]
    most = max_bicolored_without_copy(n, g).value
    # every coloring with b = most + 1 bicolored edges has a balanced copy
    b = most + 1
    assert lbal_exact(n, g).value <= bicolored_upper_bound(n, b)


def test_oracle_parallel_matches_serial():
    a = bal_exact(5, complete(4))
    b = bal_exact(5, complete(4), workers=2)
    assert a.value == b.value and a.witness_coloring == b.witness_coloring


def test_splitmix_reference_value():
    # first output for state 0 in the reference implementation
    assert splitmix64(0)[1] == 0xE220A8397B1DCDAF
    assert trial_seeds(7, 3) == trial_seeds(7, 5)[:3]


def test_verify_report_independent_of_workers():
    cfg = VerifyConfig("thm3.5", 14, 12, 42)
    a = report_json(randomized_verify(cfg, workers=1))
    b = report_json(randomized_verify(cfg, workers=2))
    assert a == b
    assert json.loads(a)["all_pass"]


@pytest.mark.parametrize("claim,n,extra", [
    ("thm3.1", 15, {}),
    ("thm3.2-upper", 20, {"k": 1}),
    ("thm3.5", 20, {}),
    ("lemma3.3", 12, {"k": 2}),
    ("lemma4.4", 40, {}),
    ("thm4.2", 7, {}),
])
def test_claims_pass(claim, n, extra):
    rep = randomized_verify(VerifyConfig(claim, n, 3, 1, **extra))
    assert rep["all_pass"], rep["failures"]


def test_turan_claim_report_values():
    rep = randomized_verify(VerifyConfig("thm4.2", 7, 1, 0))
    assert rep["first_detail"] == {"ex_half_k5": 7, "ex_c3c4c5": 7}


def test_unknown_claim():
    with pytest.raises(ValueError):
        VerifyConfig("thm9.9", 10, 1, 0)


def test_out_of_range_n():
    with pytest.raises(ValueError):
        randomized_verify(VerifyConfig("thm3.2-upper", 8, 1, 0, k=2))
