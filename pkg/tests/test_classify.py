from math import comb

import pytest

from nslab import InvalidInput, from_generators, naturals, rho
from nslab.classify import (
    GluingLeaf,
    ci_structure_checks,
    enumerate_complete_intersections,
    gluing_decomposition,
    is_complete_intersection,
    is_cyclotomic,
    reconstruct_gluing,
    semigroup_polynomial,
)
from nslab.polynomials import IntegerPolynomial, cyclotomic, peel_cyclotomic


def test_semigroup_polynomial_examples():
    assert semigroup_polynomial(from_generators([2, 3])).coeffs == (1, -1, 1)
    assert semigroup_polynomial(from_generators([4, 5, 6])).coeffs == (1, -1, 0, 0, 1, 0, 0, -1, 1)
    assert semigroup_polynomial(from_generators([3, 4, 5])).coeffs == (1, -1, 0, 1)
    assert semigroup_polynomial(naturals()).coeffs == (1,)


def test_polynomial_shape():
    for gens in ([2, 3], [3, 4, 5], [5, 7, 9], [6, 8, 9, 13]):
        S = from_generators(gens)
        P = semigroup_polynomial(S)
        assert P.degree == S.frobenius + 1
        assert P.coeffs[0] == 1 and P.coeffs[-1] == 1
        assert P(1) == 1  # telescoping: the gap sum contributes nothing at 1


def test_cyclotomic_polynomials():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    prod = cyclotomic(10) * cyclotomic(12)
    assert prod.coeffs == semigroup_polynomial(from_generators([4, 5, 6])).coeffs


def test_is_cyclotomic():
    res = is_cyclotomic(IntegerPolynomial((1, -1, 1)))
    assert res.is_cyclotomic and res.factors == (6,)
    res = is_cyclotomic(semigroup_polynomial(from_generators([4, 5, 6])))
    assert res.is_cyclotomic and res.factors == (10, 12)
    res = is_cyclotomic(IntegerPolynomial((1, -1, 0, 1)))
    assert not res.is_cyclotomic and res.factors is None
    # multiplicities are recovered
    sq = cyclotomic(6) * cyclotomic(6)
    assert is_cyclotomic(sq).factors == (6, 6)
    with pytest.raises(InvalidInput):
        peel_cyclotomic(IntegerPolynomial((2, 1)))


def test_is_complete_intersection():
    assert is_complete_intersection(from_generators([4, 5, 6]), verify_betti=True)
    assert not is_complete_intersection(from_generators([3, 4, 5]))
    assert is_complete_intersection(from_generators([2, 3]), verify_betti=True)
    assert is_complete_intersection(naturals())


def test_gluing_examples():
    tree = gluing_decomposition(from_generators([4, 5, 6]))
    assert tree is not None
    assert tree.d2 == 5 and isinstance(tree.right, GluingLeaf)
    inner = tree.left
    assert tree.d1 == 2 and (inner.d1, inner.d2) == (2, 3)
    assert reconstruct_gluing(tree) == from_generators([4, 5, 6])
    assert gluing_decomposition(from_generators([3, 4, 5])) is None
    leafy = gluing_decomposition(from_generators([2, 3]))
    assert (leafy.d1, leafy.d2) == (2, 3)
    assert isinstance(gluing_decomposition(naturals()), GluingLeaf)


def test_gluing_agrees_with_rho():
    for gens in ([4, 6, 9], [8, 10, 12, 15], [4, 5, 6], [5, 6, 9], [3, 4, 5], [5, 7, 9, 11]):
        S = from_generators(gens)
        assert (gluing_decomposition(S) is not None) == is_complete_intersection(S)


def test_ci_structure_checks():
    rep = ci_structure_checks(from_generators([4, 5, 6]))
    assert rep.complete_intersection and rep.mult_bound_ok and rep.symmetric_pair_ok
    rep = ci_structure_checks(from_generators([2, 3]))
    assert rep.mult_bound_ok  # 2 >= 2^1
    rep = ci_structure_checks(from_generators([3, 4, 5]))
    assert not rep.complete_intersection and rep.mult_bound_ok is None


def test_enumerate_complete_intersections():
    cis = enumerate_complete_intersections(25)
    gens_set = {s.gens for s in cis}
    assert (1,) in gens_set and (2, 3) in gens_set and (4, 5, 6) in gens_set
    assert all(s.frobenius <= 25 for s in cis)
    for s in cis:
        assert is_complete_intersection(s)
        assert s.multiplicity >= 2 ** (s.edim - 1)
        assert is_cyclotomic(semigroup_polynomial(s)).is_cyclotomic
    # completeness against the independent partition-search recognizer
    from nslab.lab import iter_genus_tree

    tree_cis = {s.gens for s in iter_genus_tree(10) if gluing_decomposition(s) is not None
                and s.frobenius <= 25}
    assert tree_cis == {g for g in gens_set
                        if from_generators(g).genus <= 10}


def test_ci_edim_bound_on_multiplicity():
    # every CI with 4 generators in the pool has multiplicity at least 8
    for s in enumerate_complete_intersections(40, edim_max=4):
        if s.edim == 4:
            assert s.multiplicity >= 8
