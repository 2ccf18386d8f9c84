"""From two-column tableaux to hourglass plabic graphs and back.

The forward map composes matching -> weighted dissection -> weighted
triangulation -> web; the web has one white vertex per claw set, one
trivalent black vertex per triangle, and hourglass multiplicities given
by far-side weight sums across each triangle edge.  The inverse map reads
a weighted triangulation off a contracted fully reduced graph of Pluecker
degree two: squares become diagonals of weight r - m(F), boundary edges
take the multiplicity of the opposite hourglass.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional, Union

from .hpgraph import (BLACK, BOUNDARY, INTERNAL, WHITE, Edge, HourglassGraph,
                      Vertex, claw_runs, faces, is_contracted, isomorphic,
                      star_graph, validate)
from .matchings import (NoncrossingMatching, WeightedPolygonGraph, dissection,
                        matching_from_polygon, matching_from_tableau,
                        tableau_from_matching, triangulate)
from .tableaux import RectTableau, column_tableau


def web_from_triangulation(Tr: WeightedPolygonGraph) -> HourglassGraph:
    """Fraser's web of a weighted triangulation with claw data."""
    if not Tr.is_triangulation:
        raise ValueError("web construction needs a triangulation")
    if Tr.claw_sizes is None or Tr.claw_offsets is None:
        raise ValueError("triangulation carries no claw data")
    r = Tr.total_weight
    n = Tr.n_points
    if n != 2 * r:
        raise ValueError(f"total weight {r} does not match {n} boundary points")
    s = Tr.s
    triangles = [tuple(sorted(t)) for t in Tr.triangles()]

    # far-side weight across each triangle edge, including the edge itself
    edge_tris: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for tri in triangles:
        x, y, z = tri
        for e in ((x, y), (y, z), (x, z)):
            edge_tris.setdefault(e, []).append(tri)

    def is_polygon_boundary(e: tuple[int, int]) -> bool:
        a, b = e
        return b - a == 1 or (a == 1 and b == s)

    def side_weight(e: tuple[int, int], tri: tuple[int, ...]) -> int:
        if is_polygon_boundary(e):
            a, b = e
            j = a if b - a == 1 else s
            return Tr.boundary_weights[j - 1]
        w = Tr.diagonal_weight(*e)
        other = next(t for t in edge_tris[e] if t != tri)
        for f in ((other[0], other[1]), (other[1], other[2]), (other[0], other[2])):
            if f != e:
                w += side_weight(f, other)
        return w

    bvert = [Vertex(pos, BLACK, BOUNDARY) for pos in range(1, n + 1)]
    whites = {j: n + j for j in range(1, s + 1)}
    blacks = {tri: n + s + t + 1 for t, tri in enumerate(triangles)}
    verts = bvert + [Vertex(whites[j], WHITE, INTERNAL) for j in whites]
    verts += [Vertex(blacks[tri], BLACK, INTERNAL) for tri in triangles]

    edges: list[Edge] = []
    rot: dict[int, list[int]] = {v.id: [] for v in verts}
    next_e = 0

    def add_edge(u: int, v: int, m: int) -> int:
        nonlocal next_e
        edges.append(Edge(next_e, u, v, m))
        next_e += 1
        return next_e - 1

    tri_edge: dict[tuple[tuple[int, ...], int], Optional[int]] = {}
    for tri in triangles:
        b = blacks[tri]
        for v in tri:
            opp = tuple(sorted(set(tri) - {v}))
            m = side_weight(opp, tri)
            tri_edge[(tri, v)] = add_edge(b, whites[v], m) if m > 0 else None
        rot[b] = [tri_edge[(tri, v)] for v in tri if tri_edge[(tri, v)] is not None]

    for j in range(1, s + 1):
        w = whites[j]
        claw = []
        for pos in Tr.claw_members(j):
            eid = add_edge(w, pos, 1)
            rot[pos] = [eid]
            claw.append(eid)
        # fan: triangles at j from the (j, j+1) side round to the (j-1, j) side
        at_j = [tri for tri in triangles if j in tri]
        at_j.sort(key=lambda tri: min((v - j) % s for v in tri if v != j))
        fan = [tri_edge[(tri, j)] for tri in at_j if tri_edge[(tri, j)] is not None]
        rot[w] = claw + fan

    G = HourglassGraph(r, verts, edges, rot, list(range(1, n + 1)))
    rep = validate(G)
    if not rep.ok:
        raise AssertionError(f"web construction produced an invalid graph: {rep.violations}")
    return G


def fraser_map(T: RectTableau,
               triangulation: Union[str, WeightedPolygonGraph] = "fan") -> HourglassGraph:
    """Tableau -> matching -> dissection -> triangulation -> web.

    ``triangulation`` is either the deterministic ``"fan"`` completion or
    an explicit triangulation extending the tableau's dissection by
    weight-0 diagonals.
    """
    if T.cols != 2:
        raise ValueError("the web construction takes a two-column tableau")
    D = dissection(matching_from_tableau(T))
    if triangulation == "fan":
        Tr = triangulate(D, "fan")
    elif isinstance(triangulation, WeightedPolygonGraph):
        Tr = triangulation
        if Tr.s != D.s or list(Tr.boundary_weights) != list(D.boundary_weights):
            raise ValueError("triangulation does not match the tableau's dissection")
        positive = {(a, b): w for a, b, w in Tr.diagonals if w > 0}
        if positive != {(a, b): w for a, b, w in D.diagonals}:
            raise ValueError("triangulation changes the dissection's weighted diagonals")
        Tr = replace(Tr, claw_sizes=D.claw_sizes, claw_offsets=D.claw_offsets)
        if not Tr.is_triangulation:
            raise ValueError("supplied polygon is not a triangulation")
    else:
        raise ValueError(f"unknown triangulation choice {triangulation!r}")
    return web_from_triangulation(Tr)


# -- inverse construction ---------------------------------------------------

def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(f"not a recoverable graph: {msg}")


def recover_polygon(G: HourglassGraph) -> WeightedPolygonGraph:
    """Weighted triangulation of a connected contracted fully reduced
    graph of Pluecker degree two."""
    from .trips import fully_reduced

    _require(G.is_standard_type(), "not standard type")
    _require(is_contracted(G), "not contracted")
    _require(G.n == 2 * G.r, "Pluecker degree is not two")
    _require(len(G.components()) == 1, "graph is disconnected")
    _require(fully_reduced(G), "not fully reduced")

    whites = [v.id for v in G.internal_vertices() if v.color == WHITE]
    claws: dict[int, list[int]] = {}
    for u in whites:
        runs = claw_runs(G, u)
        _require(len(runs) == 1, f"white vertex {u} has a non-consecutive claw")
        claws[u] = runs[0]
    _require(sum(len(c) for c in claws.values()) == G.n,
             "claws do not partition the boundary")
    order = sorted(whites, key=lambda u: claws[u][0])
    index = {u: j for j, u in enumerate(order, start=1)}
    s = len(order)

    for v in G.internal_vertices():
        if v.color == BLACK:
            _require(G.simple_degree(v.id) == 3,
                     f"black vertex {v.id} is not trivalent")

    diagonals = []
    square_faces = faces(G)
    for f in square_faces:
        _require(f.is_square, "a non-square interior face")
        ws = [h for h in f.vertex_ids if G.vertices[h].color == WHITE]
        _require(len(ws) == 2, "square without two white corners")
        a, b = sorted(index[w] for w in ws)
        diagonals.append((a, b, G.r - f.m_value))
        _require(G.r - f.m_value >= 0, "square face with multiplicity above r")

    boundary_weights = []
    for j in range(1, s + 1):
        u, u2 = order[j - 1], order[j % s]
        shared = [x.id for x in G.internal_vertices() if x.color == BLACK
                  and any(G.edges[e].other(x.id) == u for e in G.rotation[x.id])
                  and any(G.edges[e].other(x.id) == u2 for e in G.rotation[x.id])]
        _require(len(shared) == 1,
                 f"consecutive whites {u},{u2} share {len(shared)} black vertices")
        x = shared[0]
        third = [e for e in G.rotation[x] if G.edges[e].other(x) not in (u, u2)]
        _require(len(third) == 1, f"black vertex {x} has no third hourglass")
        boundary_weights.append(G.edges[third[0]].m)

    poly = WeightedPolygonGraph(
        s, tuple(boundary_weights), tuple(sorted(diagonals)),
        tuple(len(claws[u]) for u in order),
        tuple(claws[u][0] for u in order))
    _require(poly.is_triangulation, "reconstructed polygon is not a triangulation")
    _require(poly.total_weight == G.r, "reconstructed weights do not sum to r")
    return poly


def recover_matching(G: HourglassGraph) -> NoncrossingMatching:
    """The noncrossing matching of a contracted fully reduced graph of
    Pluecker degree two."""
    from .trips import fully_reduced

    _require(G.is_standard_type(), "not standard type")
    _require(G.n == 2 * G.r, "Pluecker degree is not two")
    comps = G.components()
    if len(comps) == 1:
        return matching_from_polygon(recover_polygon(G))
    _require(len(comps) == 2, "more than two components")
    _require(is_contracted(G), "not contracted")
    _require(fully_reduced(G), "not fully reduced")
    arcs = []
    for comp in comps:
        labels = sorted(G.boundary_label(v) for v in comp
                        if G.vertices[v].kind == BOUNDARY)
        _require(len(labels) == G.r, "components do not split the boundary evenly")
        arcs.append(labels)
    n = G.n
    lab = set(arcs[0])
    start = next(x for x in arcs[0] if (x - 2) % n + 1 not in lab)
    run = [(start - 1 + t) % n + 1 for t in range(G.r)]
    _require(set(run) == lab, "component boundary is not a cyclic arc")
    g = (start - 2) % n + 1  # gap sits between g and start
    pairs = [(run[k], (g - 1 - k) % n + 1) for k in range(G.r)]
    return NoncrossingMatching.from_arcs(n, [tuple(sorted(p)) for p in pairs])


def recover_tableau(G: HourglassGraph, check: bool = True) -> RectTableau:
    """Invert the web construction on a contracted fully reduced graph of
    Pluecker degree one or two."""
    from .trips import fully_reduced, trip_all

    _require(G.is_standard_type(), "not standard type")
    if G.n == G.r:
        _require(is_contracted(G), "not contracted")
        _require(fully_reduced(G), "not fully reduced")
        _require(isomorphic_up_to_rotation(G, star_graph(G.r)),
                 "degree-one graph is not a star")
        return column_tableau(G.r)
    _require(G.n == 2 * G.r, "Pluecker degree is not one or two")
    T = tableau_from_matching(recover_matching(G))
    if check:
        H = fraser_map(T, "fan")
        if trip_all(H) != trip_all(G):
            raise AssertionError("recovered tableau fails the trip check")
        from .explorer import move_class
        from .hpgraph import canonical_form
        if canonical_form(G) not in move_class(H).members:
            raise AssertionError("recovered tableau is not move-equivalent to the input")
    return T


def isomorphic_up_to_rotation(G: HourglassGraph, H: HourglassGraph) -> bool:
    """Isomorphism allowing a cyclic shift of boundary labels."""
    from .hpgraph import canonical_form

    if G.n != H.n or G.r != H.r:
        return False
    target = canonical_form(H)
    cur = G
    for _ in range(max(G.n, 1)):
        if canonical_form(cur) == target:
            return True
        cur = HourglassGraph(cur.r, cur.vertices.values(), cur.edges.values(),
                             cur.rotation, cur.boundary[1:] + cur.boundary[:1])
    return False
