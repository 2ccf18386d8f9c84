import itertools

import pytest

from hourglass.explorer import move_class
from hourglass.fraser import (fraser_map, isomorphic_up_to_rotation,
                              recover_matching, recover_polygon,
                              recover_tableau, web_from_triangulation)
from hourglass.hpgraph import (apply_square_move, canonical_form, faces,
                               isomorphic, restrict, rotate,
                               square_move_sites, standalone_square,
                               star_graph, validate)
from hourglass.matchings import (WeightedPolygonGraph, dissection,
                                 matching_from_tableau, triangulate)
from hourglass.tableaux import (RectTableau, column_superstandard,
                                column_tableau, promotion, standard_tableaux,
                                superstandard)
from hourglass.trips import fully_reduced, trip_all, trip_perm

FIG3 = RectTableau.from_columns([[1, 2, 4, 5, 8, 11, 13],
                                 [3, 6, 7, 9, 10, 12, 14]])


def test_fig_graph_golden_trip():
    G = fraser_map(FIG3, "fan")
    assert trip_perm(G, 4)(1) == 8


def test_trip_equals_prom_small_ranks():
    from hourglass.tableaux import prom_all
    for r in range(1, 6):
        for T in standard_tableaux(r, 2):
            assert trip_all(fraser_map(T, "fan")) == prom_all(T)


def test_column_superstandard_gives_two_claws():
    for r in (2, 3, 5):
        G = fraser_map(column_superstandard(r), "fan")
        comps = G.components()
        assert len(comps) == 2
        sides = sorted(sorted(G.boundary_label(v) for v in c
                              if G.vertices[v].kind == "boundary") for c in comps)
        assert sides == [list(range(1, r + 1)), list(range(r + 1, 2 * r + 1))]


def test_smallest_shape():
    G = fraser_map(RectTableau.from_rows([[1, 2]]), "fan")
    assert validate(G).ok
    assert G.r == 1 and G.n == 2
    assert len(G.components()) == 2  # two single-edge claws


def test_fraser_map_rejects_wrong_shape():
    with pytest.raises(ValueError):
        fraser_map(column_tableau(3))


def test_all_triangulation_choices_are_move_equivalent():
    D = dissection(matching_from_tableau(FIG3))
    choices = triangulate(D, "all")
    assert len(choices) > 1
    base = fraser_map(FIG3, "fan")
    cls = move_class(base)
    for Tr in choices:
        G = fraser_map(FIG3, WeightedPolygonGraph(
            Tr.s, Tr.boundary_weights, Tr.diagonals))
        assert trip_all(G) == trip_all(base)
        assert canonical_form(G) in cls.members


def test_explicit_triangulation_must_match_dissection():
    square = triangulate(WeightedPolygonGraph(4, (1, 1, 1, 1), ()), "fan")
    with pytest.raises(ValueError):
        fraser_map(FIG3, square)


def test_square_face_triangulation_realizes_standalone_square():
    # a 4-gon with weights (m2, m3, m4, m1) and diagonal weight eps pins a
    # square face with multiplicities m1..m4 inside a web
    for r, ms in ((4, (1, 1, 1, 1)), (5, (2, 1, 1, 1)), (6, (2, 2, 1, 1))):
        m1, m2, m3, m4 = ms
        eps = r - sum(ms)
        sizes = (m1 + m2, m2 + m3 + eps, m3 + m4, m4 + m1 + eps)
        offsets = (1, 1 + sizes[0], 1 + sizes[0] + sizes[1],
                   1 + sizes[0] + sizes[1] + sizes[2])
        Tr = WeightedPolygonGraph(4, (m2, m3, m4, m1), ((2, 4, eps),),
                                  sizes, offsets)
        G = web_from_triangulation(Tr)
        assert validate(G).ok
        assert fully_reduced(G)
        sq = [f for f in faces(G) if f.is_square]
        assert len(sq) == 1
        assert sq[0].m_value == sum(ms)
        mults = sorted(G.edges[e].m for e in sq[0].edge_ids)
        assert mults == sorted(ms)
        tilde = restrict(G, set(sq[0].vertex_ids))
        assert fully_reduced(tilde)
        # the graph is Fraser: its tableau reproduces it up to moves
        T = recover_tableau(G)
        assert trip_all(fraser_map(T, "fan")) == trip_all(G)


def test_recover_round_trip():
    for r in range(1, 6):
        for T in standard_tableaux(r, 2):
            assert recover_tableau(fraser_map(T, "fan")) == T


def test_recover_star():
    for r in range(1, 9):
        assert recover_tableau(star_graph(r)) == column_tableau(r)


def test_recover_after_square_move():
    G = fraser_map(FIG3, "fan")
    H = apply_square_move(G, square_move_sites(G)[0])
    assert recover_tableau(H) == FIG3


def test_recover_after_rotation():
    G = fraser_map(FIG3, "fan")
    assert recover_tableau(rotate(G)) == promotion(FIG3).result


def test_recover_rejects_non_standard_type():
    sq = standalone_square(4, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        recover_tableau(sq)


def test_recover_polygon_matches_dissection():
    for T in itertools.islice(standard_tableaux(5, 2), 10):
        G = fraser_map(T, "fan")
        if len(G.components()) != 1:
            continue
        poly = recover_polygon(G)
        D = dissection(matching_from_tableau(T))
        assert poly.s == D.s
        assert poly.boundary_weights == D.boundary_weights
        kept = tuple(t for t in poly.diagonals if t[2] > 0)
        assert kept == D.diagonals


def test_recover_matching_two_claws():
    G = fraser_map(column_superstandard(4), "fan")
    M = recover_matching(G)
    assert M == matching_from_tableau(column_superstandard(4))


def test_isomorphic_up_to_rotation():
    S = star_graph(5)
    assert isomorphic_up_to_rotation(S, S)
    G = fraser_map(FIG3, "fan")
    assert isomorphic_up_to_rotation(rotate(G), G)
    assert not isomorphic_up_to_rotation(G, star_graph(7))
