import itertools

import pytest

from hourglass.fraser import fraser_map
from hourglass.hpgraph import (BLACK, BOUNDARY, INTERNAL, WHITE, Edge,
                               HourglassGraph, Vertex, faces, restrict,
                               standalone_square, star_graph)
from hourglass.tableaux import (RectTableau, column_superstandard,
                                standard_tableaux, superstandard)
from hourglass.trips import (all_segments, fully_reduced,
                             has_bad_double_crossing, intersections,
                             plabic_reduced, self_intersections,
                             square_fully_reduced, trip_all, trip_perm,
                             trip_segment)

FIG3 = RectTableau.from_columns([[1, 2, 4, 5, 8, 11, 13],
                                 [3, 6, 7, 9, 10, 12, 14]])


def test_star_trip_calibration():
    for r in range(2, 9):
        S = star_graph(r)
        for i in range(1, r):
            for j in range(1, r + 1):
                assert trip_perm(S, i)(j) == (j + i - 1) % r + 1


def test_trip_index_range():
    with pytest.raises(ValueError):
        trip_perm(star_graph(4), 4)
    with pytest.raises(ValueError):
        trip_segment(star_graph(4), 0, 1)


def test_trip_inverse_property():
    for r in (3, 4, 5):
        for T in itertools.islice(standard_tableaux(r, 2), 8):
            G = fraser_map(T, "fan")
            trips = trip_all(G)
            for i in range(1, r):
                assert trips[i - 1].inverse() == trips[r - i - 1]


def test_two_claw_segments_stay_in_component():
    G = fraser_map(column_superstandard(4), "fan")
    for i in range(1, 4):
        for j in range(1, 9):
            seg = trip_segment(G, i, j)
            side = (j - 1) // 4
            assert (seg.end - 1) // 4 == side


def test_trivial_segment_count():
    # an m-hourglass carries binom(m, 2) trivial loops, identifying a loop
    # with its reversal (trip_i and trip_{r-i} traverse the same strands)
    sq = standalone_square(5, (3, 1, 1, 1))
    loops = set()
    directed = 0
    for i in range(1, 5):
        for seg in all_segments(sq, i):
            if seg.trivial:
                directed += 1
                strands = frozenset((eid, k) for eid, k, _ in seg.darts)
                loops.add((seg.edge_ids[0], strands))
    assert len(loops) == 3  # only the 3-hourglass contributes: C(3,2)
    assert directed == 6  # each loop once per direction


def test_self_intersections_empty_on_webs_and_stars():
    assert self_intersections(star_graph(6)) == []
    for T in itertools.islice(standard_tableaux(5, 2), 10):
        assert self_intersections(fraser_map(T, "fan")) == []


def floating_cycle_graph():
    """A valid star plus an isolated 4-cycle of 2-hourglasses (r=4)."""
    S = star_graph(4)
    verts = list(S.vertices.values())
    edges = list(S.edges.values())
    rot = {v: list(r) for v, r in S.rotation.items()}
    ids = [100, 101, 102, 103]
    colors = [WHITE, BLACK, WHITE, BLACK]
    for vid, c in zip(ids, colors):
        verts.append(Vertex(vid, c, INTERNAL))
    eids = [200, 201, 202, 203]
    for t in range(4):
        edges.append(Edge(eids[t], ids[t], ids[(t + 1) % 4], 2))
    for t in range(4):
        rot[ids[t]] = [eids[(t - 1) % 4], eids[t]]
    return HourglassGraph(4, verts, edges, rot, S.boundary)


def test_isolated_component_breaks_full_reducedness():
    G = floating_cycle_graph()
    assert G.isolated_components()
    assert not fully_reduced(G)
    # its interior cycles show up as self-intersections
    assert any(x["kind"] == "interior cycle" for x in self_intersections(G))


def test_intersections_disjoint_segments():
    G = fraser_map(column_superstandard(3), "fan")
    s1 = trip_segment(G, 1, 1)
    s2 = trip_segment(G, 1, 4)
    assert intersections(G, s1, s2).intersections == ()


def test_star_center_crossing_classification():
    S = star_graph(5)
    crossing = intersections(S, trip_segment(S, 2, 1), trip_segment(S, 2, 2))
    assert [x.essential for x in crossing.intersections] == [True]
    bounce = intersections(S, trip_segment(S, 1, 1), trip_segment(S, 1, 3))
    assert [x.essential for x in bounce.intersections] == [False]


def test_reversal_pair_has_no_intersections():
    S = star_graph(4)
    s1 = trip_segment(S, 2, 1)  # 1 -> 3
    s2 = trip_segment(S, 2, 3)  # 3 -> 1, the same strand path reversed
    assert s2.reversal_of(s1)
    assert intersections(S, s1, s2).intersections == ()


def test_crossing_parity_by_endpoint_configuration():
    # fully reduced graphs: endpoints interleave iff the essential count is odd
    for T in standard_tableaux(4, 2):
        G = fraser_map(T, "fan")
        segs = {i: [s for s in all_segments(G, i) if not s.trivial]
                for i in range(1, 4)}
        for i in range(1, 4):
            pairs = [(a, b) for a, b in itertools.combinations(segs[i], 2)]
            if i + 1 < 4:
                pairs += [(a, b) for a in segs[i] for b in segs[i + 1]]
            for l1, l2 in pairs:
                if l1.reversal_of(l2):
                    continue
                pts = {l1.start, l1.end, l2.start, l2.end}
                if len(pts) < 4:
                    continue
                if l1.start > min(pts):
                    l1, l2 = l2, l1
                a, b = l1.start, l1.end
                c, d = l2.start, l2.end
                ess = len(intersections(G, l1, l2).essential())
                if a < c < d < b:
                    assert ess == 0
                elif a < d < c < b:
                    assert ess % 2 == 0
                elif a < c < b < d:
                    assert ess % 2 == 1


def test_overfull_square_has_bad_double_crossing():
    sq = standalone_square(4, (2, 1, 1, 1))  # m(F) = 5 = r + 1
    assert self_intersections(sq) == []
    bad, witness = has_bad_double_crossing(sq)
    assert bad and witness is not None
    assert not fully_reduced(sq)


def test_fraser_webs_have_no_bad_double_crossing():
    for T in itertools.islice(standard_tableaux(5, 2), 12):
        G = fraser_map(T, "fan")
        bad, _ = has_bad_double_crossing(G)
        assert not bad


def test_square_fully_reduced_iff_small_multiplicity():
    for r in (3, 4, 5):
        for ms in itertools.product((1, 2), repeat=4):
            try:
                sq = standalone_square(r, ms)
            except ValueError:
                continue
            face = faces(sq)[0]
            assert square_fully_reduced(sq, face) == (sum(ms) <= r)


def test_every_web_square_face_fully_reduced():
    for T in itertools.islice(standard_tableaux(5, 2), 10):
        G = fraser_map(T, "fan")
        for f in faces(G):
            assert square_fully_reduced(G, f)


def test_restriction_of_fully_reduced_stays_fully_reduced():
    G = fraser_map(FIG3, "fan")
    f = faces(G)[0]
    assert fully_reduced(restrict(G, set(f.vertex_ids)))
    whites = {v.id for v in G.internal_vertices()}
    assert fully_reduced(restrict(G, whites))


def two_gon_graph():
    """b1 - u = v - w - b2 with a doubled edge between u and v."""
    verts = [Vertex(0, BLACK, BOUNDARY), Vertex(1, WHITE, INTERNAL),
             Vertex(2, BLACK, INTERNAL), Vertex(3, WHITE, INTERNAL),
             Vertex(4, BLACK, BOUNDARY)]
    edges = [Edge(0, 0, 1, 1), Edge(1, 1, 2, 1), Edge(2, 1, 2, 1),
             Edge(3, 2, 3, 1), Edge(4, 3, 4, 1)]
    rot = {0: [0], 1: [0, 2, 1], 2: [2, 3, 1], 3: [3, 4], 4: [4]}
    return HourglassGraph(3, verts, edges, rot, (0, 4))


def test_plabic_reduced():
    assert plabic_reduced(star_graph(1))
    assert plabic_reduced(star_graph(5))
    for T in itertools.islice(standard_tableaux(4, 2), 6):
        assert plabic_reduced(fraser_map(T, "fan"))
    assert not plabic_reduced(two_gon_graph())
