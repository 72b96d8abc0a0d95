import pytest

from nslab import (
    NotMember,
    ResourceLimit,
    betti_elements,
    factorization_graph_components,
    factorizations,
    from_generators,
    minimal_presentation,
    naturals,
    order,
    order_table,
    rho,
)

from oracles import brute_factorizations


def test_factorizations_examples():
    S = from_generators([3, 4, 5])
    assert factorizations(S, 8) == [(0, 2, 0), (1, 0, 1)]
    assert factorizations(S, 9) == [(0, 1, 1), (3, 0, 0)]
    assert factorizations(from_generators([2, 3]), 1) == []


@pytest.mark.parametrize("gens", [[3, 4, 5], [4, 5, 6], [5, 7, 9, 11], [2, 3]])
@pytest.mark.parametrize("n", [0, 7, 12, 19, 30])
def test_factorizations_brute_oracle(gens, n):
    S = from_generators(gens)
    assert factorizations(S, n) == brute_factorizations(gens, n)


def test_factorizations_cap():
    S = from_generators([2, 3])
    with pytest.raises(ResourceLimit):
        factorizations(S, 600, cap=3)


def test_order():
    S = from_generators([3, 4, 5])
    assert order(S, 8) == 2
    assert order(S, 9) == 3
    assert order(S, 0) == 0
    with pytest.raises(NotMember):
        order(S, 2)


@pytest.mark.parametrize("gens", [[3, 4, 5], [4, 5, 7], [2, 3]])
def test_order_matches_enumeration(gens):
    S = from_generators(gens)
    table = order_table(S, 40)
    for n in range(41):
        facs = brute_factorizations(gens, n)
        if facs:
            assert table[n] == max(sum(a) for a in facs)
        else:
            assert table[n] == -1


def test_graph_components():
    S = from_generators([3, 4, 5])
    comps = factorization_graph_components(S, 8)
    assert comps == [[(0, 2, 0)], [(1, 0, 1)]]
    assert len(factorization_graph_components(S, 12)) == 1
    assert factorization_graph_components(S, 3) == [[(1, 0, 0)]]
    with pytest.raises(NotMember):
        factorization_graph_components(S, 1)


def test_betti_elements_examples():
    assert betti_elements(from_generators([3, 4, 5])) == {8: 2, 9: 2, 10: 2}
    assert betti_elements(from_generators([4, 5, 6])) == {10: 2, 12: 2}
    assert betti_elements(from_generators([2, 3])) == {6: 2}
    assert betti_elements(naturals()) == {}


def test_betti_elements_window_brute():
    # brute scan over a window far past the rigorous bound finds nothing new
    S = from_generators([5, 7, 9])
    found = betti_elements(S)
    for n in range(1, 200):
        if not S.contains(n):
            continue
        facs = brute_factorizations([5, 7, 9], n)
        if len(facs) < 2:
            assert n not in found
            continue
        comps = factorization_graph_components(S, n)
        if len(comps) > 1:
            assert found[n] == len(comps)
        else:
            assert n not in found


def test_minimal_presentation():
    S = from_generators([3, 4, 5])
    pres = minimal_presentation(S)
    assert pres.rho == 3
    for rel in pres.relations:
        gens = S.gens
        left = sum(a * g for a, g in zip(rel.left, gens))
        right = sum(a * g for a, g in zip(rel.right, gens))
        assert left == right == rel.degree
        assert rel.left != rel.right
    assert minimal_presentation(from_generators([4, 5, 6])).rho == 2
    assert minimal_presentation(from_generators([2, 3])).rho == 1


def test_presentation_deterministic():
    S = from_generators([6, 7, 8, 9, 10])
    a = minimal_presentation(S)
    b = minimal_presentation(S)
    assert a == b


def test_rho_values():
    assert rho(from_generators([5, 6, 7, 8, 9])) == 10  # maximal: C(5, 2)
    assert rho(from_generators([3, 4, 5])) == 3
    assert rho(naturals()) == 0
