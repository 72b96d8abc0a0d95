from math import comb

import pytest

from nslab import InvalidInput, from_generators, naturals, rho
from nslab.tangent_cone import (
    b1_G,
    hilbert_function_G,
    is_HF_nondecreasing,
    width_checks_G,
)


def test_hilbert_function_examples():
    assert hilbert_function_G(from_generators([3, 4, 5]), 4).values == (1, 3, 3, 3, 3)
    assert hilbert_function_G(from_generators([2, 3]), 3).values == (1, 2, 2, 2)
    assert hilbert_function_G(naturals(), 5).values == (1, 1, 1, 1, 1, 1)
    with pytest.raises(InvalidInput):
        hilbert_function_G(naturals(), 0)


def test_hilbert_function_counts_orders():
    # HF(j) counts elements of order j: prefix sums count elements of order <= J
    from nslab import order_table

    S = from_generators([4, 9, 11])
    hf = hilbert_function_G(S, 6)
    table = order_table(S, S.frobenius + 6 * 4 + 1)
    for j in range(7):
        assert hf.values[j] == sum(1 for o in table if o == j)
    assert hf.values[1] == S.edim
    assert hf.stable_value == S.multiplicity


def test_hf_nondecreasing():
    assert is_HF_nondecreasing(from_generators([3, 4, 5])).nondecreasing
    assert is_HF_nondecreasing(naturals()).nondecreasing
    # classical decreasing example: HF starts (1, 10, 9, ...)
    S = from_generators([30, 35, 42, 47, 148, 153, 157, 169, 181, 193])
    rep = is_HF_nondecreasing(S)
    assert not rep.nondecreasing
    assert rep.violation_at == 2
    assert rep.values[:3] == (1, 10, 9)


def test_hf_stabilizes_at_multiplicity():
    for gens in ([3, 4, 5], [4, 9, 11], [5, 6, 9], [7, 9, 11, 13]):
        S = from_generators(gens)
        rep = is_HF_nondecreasing(S)
        assert rep.values[-1] == S.multiplicity


def test_b1_examples():
    assert b1_G(from_generators([2, 3])).count == 1
    r = b1_G(from_generators([3, 4, 5]))
    assert (r.count, r.status) == (3, "definite")
    with pytest.raises(InvalidInput):
        b1_G(from_generators([2, 3]), degree_cap=1)


def test_b1_interval_family():
    # widest case of the width bound: equality at <w, ..., 2w-1>
    for w in range(3, 7):
        r = b1_G(from_generators(range(w, 2 * w)))
        assert r.status == "definite"
        assert r.count == comb(w, 2)


@pytest.mark.parametrize("gens", [[4, 7, 10], [5, 7, 9, 11], [3, 5, 7], [6, 11, 16, 21]])
def test_b1_arithmetic_sequences_match_rho(gens):
    S = from_generators(gens)
    r = b1_G(S)
    assert r.status == "definite"
    assert r.count == rho(S)


def test_b1_lower_bound_rho():
    for gens in ([4, 9, 11], [5, 6, 9], [7, 8, 10, 11], [4, 6, 9, 11]):
        S = from_generators(gens)
        r = b1_G(S)
        assert r.status == "definite"
        assert r.count >= rho(S)


def test_width_checks():
    rep = width_checks_G(from_generators([3, 4, 5]))
    assert rep.within_binomial == "pass" and rep.within_completion == "pass"
    assert rep.b1g.count == 3 and rep.bound == 3
    rep = width_checks_G(naturals())
    assert rep.within_binomial == "pass"
    d = rep.to_json_dict()
    assert set(d) >= {"gens", "b1g", "bound", "within_completion", "within_binomial"}
