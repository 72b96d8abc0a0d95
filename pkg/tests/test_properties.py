"""Cross-module invariants checked exhaustively at desk scale."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nslab import (
    betti_elements,
    factorizations,
    from_generators,
    graded_betti,
    interval_completion,
    invariants,
    is_almost_symmetric,
    is_max_edim,
    is_nearly_gorenstein,
    is_symmetric,
    has_canonical_reduction,
    macaulay_lower,
    macaulay_upper,
    max_betti_bound,
    order,
    pseudo_frobenius,
    regularity,
    rho,
    semigroup_type,
)
from nslab.classify import (
    gluing_decomposition,
    is_complete_intersection,
    is_cyclotomic,
    reconstruct_gluing,
    semigroup_polynomial,
)
from nslab.lab import iter_genus_tree
from nslab.polynomials import IntegerPolynomial
from nslab.resolution import _binomial_expansion
from nslab.tangent_cone import b1_G, hilbert_function_G

from oracles import sieve_gaps_and_frob

POOL = [S for S in iter_genus_tree(9)]
SMALL = [S for S in POOL if S.genus <= 7]


def test_first_order_inequalities():
    for S in POOL:
        inv = invariants(S)
        assert inv["edim"] <= inv["multiplicity"]
        if S.frobenius >= 0:
            assert inv["type"] <= inv["multiplicity"] - 1
            assert inv["eta"] + inv["genus"] == inv["frobenius"] + 1


def test_symmetric_iff_type_one():
    for S in POOL:
        if S.frobenius < 0:
            continue
        assert is_symmetric(S) == (semigroup_type(S) == 1)


def test_duality_implication_chain():
    for S in POOL:
        sym = is_symmetric(S)
        asym = is_almost_symmetric(S)
        ng = is_nearly_gorenstein(S)
        cr = has_canonical_reduction(S)
        assert (not sym or asym) and (not asym or ng) and (not ng or cr)


def test_interval_completion_properties():
    for S in POOL:
        T = interval_completion(S)
        assert interval_completion(T) == T
        assert T.multiplicity == S.multiplicity
        assert T.width <= S.width


def test_max_edim_iff_max_type():
    for S in POOL:
        if S.frobenius < 0:
            continue
        assert is_max_edim(S) == (semigroup_type(S) == S.multiplicity - 1)


def test_rho_lower_bound_and_presentation_degrees():
    for S in SMALL:
        assert rho(S) >= S.edim - 1


def test_order_dominates_enumerated_lengths():
    for S in SMALL[:60]:
        n = S.frobenius + 2 * S.multiplicity + 1
        facs = factorizations(S, n)
        if facs:
            assert order(S, n) == max(sum(a) for a in facs)


def test_betti_tables_cross_checked():
    for S in SMALL:
        if S.frobenius < 0:
            continue
        table0 = graded_betti(S, 0)
        table2 = graded_betti(S, 2)
        e = S.edim
        for table in (table0, table2):
            totals = table.totals()
            # alternating sum vanishes
            assert sum((-1) ** i * b for i, b in enumerate(totals)) == 0
            # first and last Betti numbers are characteristic independent
            assert totals[1] == rho(S)
            if e >= 2:
                assert totals[e - 1] == semigroup_type(S)
            # multiplicity bound, with equality exactly at maximal edim
            m = S.multiplicity
            for i in range(1, e):
                assert totals[i] <= max_betti_bound(i, m)
        # the degree-graded first row matches the factorization graph data
        assert table0.row(1) == {n: c - 1 for n, c in betti_elements(S).items()}


def test_symmetric_tables_self_dual():
    for S in SMALL:
        if S.frobenius < 0 or not is_symmetric(S):
            continue
        totals = graded_betti(S).totals()
        assert totals == totals[::-1]


def test_max_edim_betti_shape():
    for S in POOL:
        if S.frobenius < 0 or not is_max_edim(S):
            continue
        if S.genus > 7:
            continue
        m = S.multiplicity
        assert rho(S) == comb(m, 2)
        totals = graded_betti(S).totals()
        assert totals == [1] + [i * comb(m, i + 1) for i in range(1, m)]


def test_regularity_identity_sample():
    for S in SMALL:
        assert regularity(S) == S.frobenius + 1


def test_ci_routes_agree_and_imply():
    for S in SMALL:
        ci = is_complete_intersection(S)
        tree = gluing_decomposition(S)
        assert ci == (tree is not None)
        if tree is not None:
            assert reconstruct_gluing(tree) == S
        cyc = is_cyclotomic(semigroup_polynomial(S))
        if ci:
            assert cyc.is_cyclotomic
        if cyc.is_cyclotomic:
            assert is_symmetric(S)  # cyclotomic semigroups are symmetric
        P = semigroup_polynomial(S)
        assert P.degree == S.frobenius + 1


def test_tangent_cone_relations():
    for S in SMALL[:80]:
        if S.edim == 1:
            continue
        hf = hilbert_function_G(S, 6)
        assert hf.values[0] == 1 and hf.values[1] == S.edim
        res = b1_G(S)
        if res.status == "definite":
            assert rho(S) <= res.count
        if is_max_edim(S):
            assert hf.values[2:] == tuple([S.multiplicity] * (len(hf.values) - 2))


# -- randomized properties -------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(min_value=2, max_value=40), min_size=1, max_size=5))
def test_from_generators_matches_sieve(gens):
    from math import gcd

    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        return
    S = from_generators(gens)
    gaps, frob = sieve_gaps_and_frob(sorted(gens))
    assert S.frobenius == frob
    assert S.gap_list() == gaps


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=4000), st.integers(min_value=1, max_value=6))
def test_macaulay_expansion_roundtrip(n, d):
    if n == 0:
        assert macaulay_upper(n, d) == macaulay_lower(n, d) == 0
        return
    parts = _binomial_expansion(n, d)
    assert sum(comb(t, i) for t, i in parts) == n
    tops = [t for t, _ in parts]
    lows = [i for _, i in parts]
    assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
    assert lows == list(range(d, d - len(lows), -1))
    assert all(t >= i for t, i in parts)
    assert macaulay_upper(n, d) >= n >= macaulay_lower(n, d)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=8),
    st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=8),
)
def test_polynomial_product_division_roundtrip(a, b):
    pa, pb = IntegerPolynomial(tuple(a)), IntegerPolynomial(tuple(b))
    prod = pa * pb
    if pb:
        q = prod.exact_div(pb)
        if pa:
            assert q is not None and q.coeffs == pa.coeffs
        else:
            assert q is not None and not q
