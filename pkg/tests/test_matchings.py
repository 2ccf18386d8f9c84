import pytest

from hourglass.matchings import (NoncrossingMatching, WeightedPolygonGraph,
                                 catalan, claw_sets, dissection,
                                 flip_zero_diagonal, matching_from_polygon,
                                 matching_from_tableau, tableau_from_matching,
                                 triangulate)
from hourglass.tableaux import (RectTableau, column_superstandard,
                                standard_tableaux, superstandard)

FIG3 = RectTableau.from_columns([[1, 2, 4, 5, 8, 11, 13],
                                 [3, 6, 7, 9, 10, 12, 14]])
FIG3_MATCHING = NoncrossingMatching.from_arcs(
    14, [(1, 10), (2, 3), (4, 7), (5, 6), (8, 9), (11, 12), (13, 14)])


def nested(r):
    return NoncrossingMatching.from_arcs(2 * r, [(k, 2 * r + 1 - k) for k in range(1, r + 1)])


def test_matching_validation():
    with pytest.raises(ValueError):
        NoncrossingMatching((2, 1, 4, 3, 6, 5, 8, 7, 3, 10))  # not involution
    with pytest.raises(ValueError):
        NoncrossingMatching.from_arcs(4, [(1, 3), (2, 4)])  # crossing


def test_matching_from_tableau_golden():
    assert matching_from_tableau(FIG3) == FIG3_MATCHING
    assert matching_from_tableau(superstandard(4, 2)) == NoncrossingMatching.from_arcs(
        8, [(1, 2), (3, 4), (5, 6), (7, 8)])
    assert matching_from_tableau(RectTableau.from_rows([[1, 2]])) == \
        NoncrossingMatching.from_arcs(2, [(1, 2)])


def test_tableau_matching_round_trip_r7():
    count = 0
    for T in standard_tableaux(7, 2):
        assert tableau_from_matching(matching_from_tableau(T)) == T
        count += 1
    assert count == 429


def test_claw_sets_golden():
    assert claw_sets(FIG3_MATCHING) == [[3, 4, 5], [6, 7, 8], [9, 10, 11],
                                        [12, 13], [14, 1, 2]]
    assert claw_sets(matching_from_tableau(superstandard(4, 2))) == \
        [[2, 3], [4, 5], [6, 7], [8, 1]]
    assert claw_sets(nested(4)) == [[5, 6, 7, 8], [1, 2, 3, 4]]


def test_claw_sets_partition():
    for r in range(1, 8):
        for T in standard_tableaux(r, 2):
            claws = claw_sets(matching_from_tableau(T))
            flat = sorted(x for c in claws for x in c)
            assert flat == list(range(1, 2 * r + 1))


def test_dissection_golden_pentagon():
    D = dissection(FIG3_MATCHING)
    assert D.s == 5
    assert D.boundary_weights == (2, 1, 1, 1, 1)
    assert D.diagonals == ((3, 5, 1),)
    assert D.total_weight == 7


def test_dissection_superstandard_no_diagonals():
    for r in range(3, 7):
        D = dissection(matching_from_tableau(superstandard(r, 2)))
        assert D.s == r
        assert D.diagonals == ()
        assert D.boundary_weights == (1,) * r
    # r=2 degenerates to the 2-gon
    assert dissection(matching_from_tableau(superstandard(2, 2))).s == 2


def test_dissection_degenerate_two_gon():
    D = dissection(nested(3))
    assert D.s == 2
    assert sorted(D.boundary_weights) == [0, 3]
    assert D.diagonals == ()
    D1 = dissection(nested(1))
    assert D1.s == 2 and sorted(D1.boundary_weights) == [0, 1]


def test_dissection_weight_properties_exhaustive():
    for r in range(1, 8):
        for T in standard_tableaux(r, 2):
            M = matching_from_tableau(T)
            D = dissection(M)
            assert D.total_weight == r
            claws = claw_sets(M)
            if D.s > 2:
                for j in range(1, D.s + 1):
                    assert D.vertex_weight(j) == len(claws[j - 1])


def test_polygon_rejects_bad_diagonals():
    with pytest.raises(ValueError):
        WeightedPolygonGraph(4, (1, 1, 1, 1), ((1, 2, 0),))  # boundary edge
    with pytest.raises(ValueError):
        WeightedPolygonGraph(6, (1,) * 6, ((1, 3, 0), (2, 4, 0)))  # crossing


def test_triangulate_fan_and_all():
    square = WeightedPolygonGraph(4, (1, 1, 1, 1), ())
    fan = triangulate(square, "fan")
    assert fan.diagonal_pairs() == {(1, 3)}
    assert len(triangulate(square, "all")) == 2
    for s in range(3, 8):
        poly = WeightedPolygonGraph(s, (1,) * s, ())
        assert len(triangulate(poly, "all")) == catalan(s - 2)
    tri = WeightedPolygonGraph(3, (1, 1, 1), ())
    assert triangulate(tri, "fan") == tri
    two = WeightedPolygonGraph(2, (2, 0), ())
    assert triangulate(two, "fan") == two


def test_triangulations_restrict_back_to_dissection():
    D = dissection(FIG3_MATCHING)
    for Tr in triangulate(D, "all"):
        kept = tuple(t for t in Tr.diagonals if t[2] > 0)
        assert kept == D.diagonals


def test_flip_zero_diagonal():
    square = triangulate(WeightedPolygonGraph(4, (1, 1, 1, 1), ()), "fan")
    flipped = flip_zero_diagonal(square, (1, 3))
    assert flipped.diagonal_pairs() == {(2, 4)}
    assert flip_zero_diagonal(flipped, (2, 4)).diagonal_pairs() == {(1, 3)}
    pentagon_fan = triangulate(WeightedPolygonGraph(5, (1,) * 5, ()), "fan")
    assert pentagon_fan.diagonal_pairs() == {(1, 3), (1, 4)}
    assert flip_zero_diagonal(pentagon_fan, (1, 3)).diagonal_pairs() == {(1, 4), (2, 4)}
    with pytest.raises(ValueError):
        flip_zero_diagonal(square, (2, 4))  # not present
    D = dissection(FIG3_MATCHING)
    Tr = triangulate(D, "fan")
    with pytest.raises(ValueError):
        flip_zero_diagonal(Tr, (3, 5))  # positive weight


def test_matching_from_polygon_inverts_dissection():
    for r in range(1, 8):
        for T in standard_tableaux(r, 2):
            M = matching_from_tableau(T)
            assert matching_from_polygon(dissection(M)) == M


def test_matching_json_round_trip():
    assert NoncrossingMatching.from_json(FIG3_MATCHING.to_json()) == FIG3_MATCHING
    poly = dissection(FIG3_MATCHING)
    again = WeightedPolygonGraph.from_json(poly.to_json())
    assert again.boundary_weights == poly.boundary_weights
    assert again.diagonals == poly.diagonals
