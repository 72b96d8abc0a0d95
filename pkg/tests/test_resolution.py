import pytest

from nslab import (
    InvalidInput,
    NotMember,
    SimplicialComplex,
    bound_C,
    bound_D,
    divisor_complex,
    from_generators,
    graded_betti,
    macaulay_lower,
    macaulay_upper,
    max_betti_bound,
    naturals,
    reduced_homology_dims,
    regularity,
)


def test_divisor_complex_faces():
    K = divisor_complex(from_generators([3, 4, 5]), 8)
    assert K.vertex_count == 3
    # facets {g1, g3} and {g2}: 8-3-5 = 0 is an element, 8-4 = 4 is, 8-4-g ever is not
    assert set(K.facets) == {0b101, 0b010}
    assert divisor_complex(from_generators([3, 4, 5]), 0).facets == (0,)
    K = divisor_complex(from_generators([2, 3]), 6)
    assert set(K.facets) == {0b01, 0b10}
    with pytest.raises(NotMember):
        divisor_complex(from_generators([3, 4, 5]), 2)


def test_reduced_homology_small_complexes():
    point = SimplicialComplex(1, (0b1,))
    assert reduced_homology_dims(point) == (0, 0)
    two_points = SimplicialComplex(2, (0b01, 0b10))
    assert reduced_homology_dims(two_points) == (0, 1, 0)
    hollow_triangle = SimplicialComplex(3, (0b011, 0b101, 0b110))
    assert reduced_homology_dims(hollow_triangle) == (0, 0, 1, 0)
    filled_triangle = SimplicialComplex(3, (0b111,))
    assert reduced_homology_dims(filled_triangle) == (0, 0, 0, 0)
    empty_face_only = SimplicialComplex(2, (0,))
    assert reduced_homology_dims(empty_face_only) == (1, 0, 0)


def test_reduced_homology_characteristics():
    # a triangulation of the real projective plane: torsion separates 0 and 2
    facets = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 4, 5), (2, 3, 5), (1, 3, 5), (1, 3, 4),
    ]
    masks = tuple(sum(1 << v for v in f) for f in facets)
    K = SimplicialComplex(6, masks)
    char0 = reduced_homology_dims(K, 0)
    char2 = reduced_homology_dims(K, 2)
    assert char0 == (0, 0, 0, 0, 0, 0, 0)
    assert char2[1:3] == (0, 1) and char2[3] == 1
    with pytest.raises(InvalidInput):
        reduced_homology_dims(K, 4)


def test_graded_betti_totals():
    assert graded_betti(from_generators([3, 4, 5])).totals() == [1, 3, 2]
    assert graded_betti(from_generators([4, 5, 6])).totals() == [1, 2, 1]
    assert graded_betti(from_generators([4, 5, 6, 7])).totals() == [1, 6, 8, 3]
    assert graded_betti(naturals()).totals() == [1]


def test_graded_betti_rows():
    S = from_generators([3, 4, 5])
    table = graded_betti(S)
    assert table.row(1) == {8: 1, 9: 1, 10: 1}
    assert table.row(0) == {0: 1}
    # last row sits at degrees p + sum(gens) for pseudo-Frobenius p
    assert set(table.row(2)) == {1 + 12, 2 + 12}
    # characteristic 2 agrees here
    assert graded_betti(S, 2).totals() == [1, 3, 2]


def test_regularity():
    assert regularity(from_generators([2, 3])) == 2
    assert regularity(from_generators([4, 5, 6])) == 8
    assert regularity(naturals()) == 0


def test_macaulay_operators():
    assert macaulay_upper(5, 2) == 7
    assert macaulay_lower(5, 2) == 2
    assert macaulay_upper(0, 3) == 0
    assert macaulay_lower(0, 1) == 0
    with pytest.raises(InvalidInput):
        macaulay_upper(5, 0)


def test_bounds():
    assert bound_C(3, 4) == 6
    assert bound_D(3, 4) == 3
    for e in range(3, 9):
        from math import comb

        assert bound_C(e, e + 1) == comb(e + 1, 2)
    with pytest.raises(InvalidInput):
        bound_C(2, 5)
    with pytest.raises(InvalidInput):
        bound_C(4, 4)


def test_max_betti_bound():
    assert max_betti_bound(1, 5) == 10
    assert max_betti_bound(3, 4) == 3
    assert max_betti_bound(4, 5) == 4 * 1
    with pytest.raises(InvalidInput):
        max_betti_bound(5, 5)


def test_betti_json_shape():
    d = graded_betti(from_generators([2, 3])).to_json_dict()
    assert d["char"] == 0
    assert {"i": 1, "j": 6, "b": 1} in d["entries"]
    assert d["totals"] == [1, 1]
