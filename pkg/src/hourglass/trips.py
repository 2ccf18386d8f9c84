"""Trip segments, trip permutations, and the fully-reduced predicate.

Turn convention: rotations are clockwise, and an edge of multiplicity m
occupies m consecutive strand slots at each endpoint, in the same
clockwise order at both ends (the hourglass twist).  Arriving at a white
vertex on slot p, the i-th leftmost turn leaves on slot p+i; at a black
vertex the i-th rightmost turn leaves on slot p-i.  This is the unique
handedness that satisfies trip_i(S_r)(j) = j+i (mod r) on the star graph
and reproduces the two-column golden values; flipping either sign breaks
those calibration tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .hpgraph import BLACK, BOUNDARY, WHITE, HourglassGraph, Face, restrict
from .permutation import Permutation


class TripLoopError(ValueError):
    """A boundary walk revisited a strand state; the graph is degenerate."""

    def __init__(self, i: int, j: int):
        super().__init__(f"trip_{i} walk from boundary {j} loops")
        self.i = i
        self.j = j


@dataclass(frozen=True)
class TripSegment:
    """A strand walk.  ``vertices`` and ``edge_ids`` describe the walk on
    the underlying simple graph; ``darts`` keeps (edge, strand, head).
    Closed segments are interior cycles; a trivial one loops inside a
    single hourglass edge."""
    i: int
    start: Optional[int]  # boundary label, None for interior cycles
    end: Optional[int]
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    darts: tuple[tuple[int, int, int], ...]
    closed: bool

    @property
    def trivial(self) -> bool:
        return self.closed and len(set(self.edge_ids)) == 1

    def reversal_of(self, other: "TripSegment") -> bool:
        return (not self.closed and not other.closed
                and self.vertices == tuple(reversed(other.vertices))
                and self.edge_ids == tuple(reversed(other.edge_ids)))


class _Walker:
    """Caches the strand-slot expansion of a graph's rotation system."""

    def __init__(self, G: HourglassGraph):
        self.G = G
        self.slots: dict[int, list[tuple[int, int]]] = {}
        self.pos: dict[tuple[int, int, int], int] = {}
        for vid in G.vertices:
            lst = []
            for eid in G.rotation[vid]:
                for k in range(1, G.edges[eid].m + 1):
                    self.pos[(vid, eid, k)] = len(lst)
                    lst.append((eid, k))
            self.slots[vid] = lst

    def step(self, dart: tuple[int, int, int], i: int) -> tuple[int, int, int]:
        """Next dart after taking the trip_i turn at the head of ``dart``."""
        eid, k, head = dart
        lst = self.slots[head]
        p = self.pos[(head, eid, k)]
        d = len(lst)
        if self.G.vertices[head].color == WHITE:
            out_e, out_k = lst[(p + i) % d]
        else:
            out_e, out_k = lst[(p - i) % d]
        return (out_e, out_k, self.G.edges[out_e].other(head))

    def boundary_start(self, label: int) -> tuple[int, int, int]:
        vid = self.G.boundary_vertex(label)
        (eid, k), = self.slots[vid]
        return (eid, k, self.G.edges[eid].other(vid))


def trip_segment(G: HourglassGraph, i: int, j: int,
                 walker: Optional[_Walker] = None) -> TripSegment:
    """Walk trip_i from boundary label j until a boundary vertex."""
    if not 1 <= i <= G.r - 1:
        raise ValueError(f"trip index i={i} out of range 1..{G.r - 1}")
    w = walker or _Walker(G)
    start_v = G.boundary_vertex(j)
    dart = w.boundary_start(j)
    vertices = [start_v]
    edge_ids = []
    darts = []
    seen = set()
    while True:
        if dart in seen:
            raise TripLoopError(i, j)
        seen.add(dart)
        darts.append(dart)
        eid, _, head = dart
        vertices.append(head)
        edge_ids.append(eid)
        if G.vertices[head].kind == BOUNDARY:
            return TripSegment(i, j, G.boundary_label(head),
                               tuple(vertices), tuple(edge_ids), tuple(darts), False)
        dart = w.step(dart, i)


def all_segments(G: HourglassGraph, i: int,
                 walker: Optional[_Walker] = None) -> list[TripSegment]:
    """All trip_i segments: one per boundary vertex plus interior cycles
    (including trivial single-hourglass loops)."""
    w = walker or _Walker(G)
    segs = []
    visited: set[tuple[int, int, int]] = set()
    for j in range(1, G.n + 1):
        seg = trip_segment(G, i, j, w)
        visited.update(seg.darts)
        segs.append(seg)
    # remaining strand states organise into interior cycles
    for vid in G.vertices:
        for eid, k in w.slots[vid]:
            other = G.edges[eid].other(vid)
            dart = (eid, k, other)
            if dart in visited or G.vertices[other].kind == BOUNDARY:
                continue
            cyc = []
            cur = dart
            while cur not in visited:
                visited.add(cur)
                cyc.append(cur)
                cur = w.step(cur, i)
            if cyc:
                vertices = tuple(d[2] for d in cyc)
                edge_ids = tuple(d[0] for d in cyc)
                segs.append(TripSegment(i, None, None, vertices, edge_ids,
                                        tuple(cyc), True))
    return segs


def trip_perm(G: HourglassGraph, i: int) -> Permutation:
    w = _Walker(G)
    return Permutation(trip_segment(G, i, j, w).end for j in range(1, G.n + 1))


def trip_all(G: HourglassGraph) -> tuple[Permutation, ...]:
    w = _Walker(G)
    return tuple(
        Permutation(trip_segment(G, i, j, w).end for j in range(1, G.n + 1))
        for i in range(1, G.r))


# -- self-intersections ----------------------------------------------------

def self_intersections(G: HourglassGraph) -> list[dict]:
    """Vertex revisits of non-trivial segments, over all trip indices.
    Interior non-trivial cycles count: such a walk never closes up at the
    boundary and necessarily repeats vertices."""
    out = []
    w = _Walker(G)
    for i in range(1, G.r):
        for seg in all_segments(G, i, w):
            if seg.trivial:
                continue
            if seg.closed:
                out.append({"i": i, "start": None, "kind": "interior cycle",
                            "vertices": seg.vertices})
                continue
            seen = set()
            for v in seg.vertices:
                if v in seen:
                    out.append({"i": i, "start": seg.start, "kind": "revisit",
                                "vertex": v})
                    break
                seen.add(v)
    return out


# -- pairwise intersections -------------------------------------------------

@dataclass(frozen=True)
class Intersection:
    location: tuple[int, ...]  # vertices of the contracted shared piece
    essential: bool
    pos1: int  # entry index along the first segment
    pos2: int


@dataclass(frozen=True)
class IntersectionReport:
    intersections: tuple[Intersection, ...]

    def essential(self) -> list[Intersection]:
        return [x for x in self.intersections if x.essential]


def _merged_rotation(G: HourglassGraph, path: list[int],
                     path_edges: list[int]) -> list[tuple[int, int]]:
    """Cyclic order of (edge, attach-vertex) darts around the contraction
    of ``path``; standard rotation splice, one edge at a time."""
    merged = [(eid, path[0]) for eid in G.rotation[path[0]]]
    for t in range(1, len(path)):
        u, v = path[t - 1], path[t]
        f = path_edges[t - 1]
        i = merged.index((f, u))
        part1 = merged[i + 1:] + merged[:i]
        rot_v = [(eid, v) for eid in G.rotation[v]]
        jdx = rot_v.index((f, v))
        part2 = rot_v[jdx + 1:] + rot_v[:jdx]
        merged = part1 + part2
    return merged


def _shared_components(seg1: TripSegment, seg2: TripSegment):
    """Connected pieces of the common subgraph, each contiguous in both
    segments; returns (vertex set, [lo1, hi1], [lo2, hi2]) triples."""
    v1 = set(seg1.vertices)
    v2 = set(seg2.vertices)
    shared_v = v1 & v2
    if not shared_v:
        return []
    shared_e = set(seg1.edge_ids) & set(seg2.edge_ids)
    parent = {v: v for v in shared_v}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    idx1 = {v: i for i, v in enumerate(seg1.vertices)}
    for t, eid in enumerate(seg1.edge_ids):
        if eid in shared_e:
            a, b = seg1.vertices[t], seg1.vertices[t + 1]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    comps: dict[int, set[int]] = {}
    for v in shared_v:
        comps.setdefault(find(v), set()).add(v)
    idx2 = {v: i for i, v in enumerate(seg2.vertices)}
    out = []
    for comp in comps.values():
        r1 = sorted(idx1[v] for v in comp)
        r2 = sorted(idx2[v] for v in comp)
        if r1 != list(range(r1[0], r1[-1] + 1)) or r2 != list(range(r2[0], r2[-1] + 1)):
            raise AssertionError("shared piece is not contiguous; segments self-intersect?")
        out.append((comp, (r1[0], r1[-1]), (r2[0], r2[-1])))
    out.sort(key=lambda item: item[1][0])
    return out


def intersections(G: HourglassGraph, seg1: TripSegment,
                  seg2: TripSegment) -> IntersectionReport:
    """Classify every intersection of two segments per the contraction
    rule; a shared boundary vertex counts as an essential intersection at
    its internal neighbour.  A segment and its exact reversal trace one
    simple curve and have no intersections."""
    for seg in (seg1, seg2):
        if seg.closed or len(set(seg.vertices)) != len(seg.vertices):
            raise ValueError("intersections need boundary segments without "
                             "self-intersections")
    if seg1.reversal_of(seg2) or (seg1.vertices == seg2.vertices
                                  and seg1.edge_ids == seg2.edge_ids):
        return IntersectionReport(())
    found = []
    for comp, (lo1, hi1), (lo2, hi2) in _shared_components(seg1, seg2):
        boundary_in_comp = [v for v in comp if G.vertices[v].kind == BOUNDARY]
        if boundary_in_comp:
            bk = boundary_in_comp[0]
            eid = G.rotation[bk][0]
            inner = G.edges[eid].other(bk)
            found.append(Intersection((inner,), True, lo1, lo2))
            continue
        # contract the shared path and read the four free darts
        path = list(seg1.vertices[lo1:hi1 + 1])
        path_edges = list(seg1.edge_ids[lo1:hi1])
        a_in = (seg1.edge_ids[lo1 - 1], seg1.vertices[lo1])
        a_out = (seg1.edge_ids[hi1], seg1.vertices[hi1])
        b_in = (seg2.edge_ids[lo2 - 1], seg2.vertices[lo2])
        b_out = (seg2.edge_ids[hi2], seg2.vertices[hi2])
        merged = _merged_rotation(G, path, path_edges)
        marks = []
        for entry in merged:
            if entry in (a_in, a_out):
                marks.append("a")
            elif entry in (b_in, b_out):
                marks.append("b")
        if len(marks) != 4:
            raise AssertionError("free darts of a shared piece not found")
        essential = marks in (["a", "b", "a", "b"], ["b", "a", "b", "a"])
        found.append(Intersection(tuple(path), essential, lo1, lo2))
    found.sort(key=lambda x: x.pos1)
    return IntersectionReport(tuple(found))


def _scan_pairs(G: HourglassGraph, walker: _Walker):
    """Pairs subject to the double-crossing rule: (trip_i, trip_i) and
    (trip_i, trip_{i+1}), non-trivial segments only."""
    segs = {i: [s for s in all_segments(G, i, walker) if not s.trivial]
            for i in range(1, G.r)}
    for i in range(1, G.r):
        for s1, s2 in itertools.combinations(segs[i], 2):
            yield s1, s2
        if i + 1 < G.r:
            for s1 in segs[i]:
                for s2 in segs[i + 1]:
                    yield s1, s2


def has_bad_double_crossing(G: HourglassGraph):
    """Scan for an essential intersection followed, forwards along both
    segments, by another.  Returns (flag, witness)."""
    if self_intersections(G):
        raise ValueError("double crossings are only defined without self-intersections")
    w = _Walker(G)
    for s1, s2 in _scan_pairs(G, w):
        if s1.reversal_of(s2):
            continue
        ess = intersections(G, s1, s2).essential()
        for x, y in itertools.combinations(ess, 2):
            if (x.pos1 - y.pos1) * (x.pos2 - y.pos2) > 0:
                witness = {
                    "i": s1.i, "j": s1.start, "i2": s2.i, "j2": s2.start,
                    "sites": (x, y),
                }
                return True, witness
    return False, None


def fully_reduced(G: HourglassGraph) -> bool:
    """No isolated components, no self-intersections, and no bad double
    crossing between trip_i/trip_i or trip_i/trip_{i+1} segments."""
    if G.isolated_components():
        return False
    if self_intersections(G):
        return False
    bad, _ = has_bad_double_crossing(G)
    return not bad


def square_fully_reduced(G: HourglassGraph, face: Face) -> bool:
    """Restrict to the square face and test full reducedness there."""
    if not face.is_square:
        raise ValueError("not a square face")
    return fully_reduced(restrict(G, set(face.vertex_ids)))


# -- reducedness of the underlying plabic graph -----------------------------

def underlying_plabic(G: HourglassGraph) -> HourglassGraph:
    """Forget multiplicities: every hourglass becomes a simple edge."""
    from .hpgraph import Edge
    edges = [Edge(e.id, e.u, e.v, 1) for e in G.edges.values()]
    return HourglassGraph(G.r, G.vertices.values(), edges, G.rotation, G.boundary)


def plabic_reduced(G: HourglassGraph) -> bool:
    """Postnikov reducedness of the underlying plabic graph: no round
    trips, no essential self-intersections, no bad double crossings among
    one-turn trips, and fixed points only at leaves."""
    H = underlying_plabic(G)
    if H.r < 2:  # the one-turn trip rule does not depend on r
        H = HourglassGraph(2, H.vertices.values(), H.edges.values(),
                           H.rotation, H.boundary)
    w = _Walker(H)
    segs = []
    for j in range(1, H.n + 1):
        try:
            segs.append(trip_segment(H, 1, j, w))
        except TripLoopError:
            return False
    visited = {d for s in segs for d in s.darts}
    for vid in H.vertices:
        for eid, k in w.slots[vid]:
            other = H.edges[eid].other(vid)
            dart = (eid, k, other)
            if dart not in visited and H.vertices[other].kind != BOUNDARY:
                return False  # round trip
    for seg in segs:
        if _has_essential_self_crossing(H, seg):
            return False
        if seg.end == seg.start:
            inner = H.edges[H.rotation[H.boundary_vertex(seg.start)][0]].other(
                H.boundary_vertex(seg.start))
            if H.simple_degree(inner) != 1:
                return False
    simple = [s for s in segs if len(set(s.vertices)) == len(s.vertices)]
    for s1, s2 in itertools.combinations(simple, 2):
        if s1.reversal_of(s2):
            continue
        ess = intersections(H, s1, s2).essential()
        for x, y in itertools.combinations(ess, 2):
            if (x.pos1 - y.pos1) * (x.pos2 - y.pos2) > 0:
                return False
    return True


def _has_essential_self_crossing(H: HourglassGraph, seg: TripSegment) -> bool:
    """Two visits through one vertex cross essentially iff their four walk
    edges are distinct and interleave in the rotation; visits sharing an
    edge are bounces along a retraced run."""
    positions: dict[int, list[int]] = {}
    for t, v in enumerate(seg.vertices):
        positions.setdefault(v, []).append(t)
    for v, ts in positions.items():
        if len(ts) < 2 or H.vertices[v].kind == BOUNDARY:
            continue
        for t1, t2 in itertools.combinations(ts, 2):
            legs = []
            for t in (t1, t2):
                e_in = seg.edge_ids[t - 1] if t > 0 else None
                e_out = seg.edge_ids[t] if t < len(seg.edge_ids) else None
                legs.append((e_in, e_out))
            all_edges = [e for leg in legs for e in leg if e is not None]
            if len(set(all_edges)) != 4:
                continue  # shared edge: a bounce, inessential
            marks = []
            for eid in H.rotation[v]:
                if eid in legs[0]:
                    marks.append("a")
                elif eid in legs[1]:
                    marks.append("b")
            if marks in (["a", "b", "a", "b"], ["b", "a", "b", "a"]):
                return True
    return False
