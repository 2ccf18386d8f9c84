"""Hourglass plabic graphs stored as rotation systems with multiplicities.

A graph lives in a disk: boundary vertices are labelled clockwise, every
vertex carries the clockwise cyclic order of its incident edges, and an
edge of multiplicity m stands for an m-hourglass (m strands, twisted so
the clockwise strand order agrees at both endpoints).  No coordinates are
stored; faces, restrictions and moves are computed from the rotation
system alone.  Graphs are treated as immutable; every operation returns a
new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

BLACK = "black"
WHITE = "white"
BOUNDARY = "boundary"
INTERNAL = "internal"


def opposite(color: str) -> str:
    return WHITE if color == BLACK else BLACK


@dataclass(frozen=True)
class Vertex:
    id: int
    color: str
    kind: str


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    m: int

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w} not on edge {self.id}")


class HourglassGraph:
    def __init__(self, r: int, vertices: Iterable[Vertex], edges: Iterable[Edge],
                 rotation: dict[int, Sequence[int]], boundary: Sequence[int]):
        self.r = r
        self.vertices = {v.id: v for v in vertices}
        self.edges = {e.id: e for e in edges}
        self.rotation = {vid: tuple(rot) for vid, rot in rotation.items()}
        self.boundary = tuple(boundary)
        self._check_structure()

    def _check_structure(self):
        incident: dict[int, list[int]] = {vid: [] for vid in self.vertices}
        for e in self.edges.values():
            if e.u not in self.vertices or e.v not in self.vertices:
                raise ValueError(f"edge {e.id} references missing vertex")
            if e.u == e.v:
                raise ValueError(f"edge {e.id} is a loop")
            incident[e.u].append(e.id)
            incident[e.v].append(e.id)
        for vid in self.vertices:
            rot = self.rotation.get(vid)
            if rot is None or sorted(rot) != sorted(incident[vid]):
                raise ValueError(f"rotation at vertex {vid} does not list its edges")
        bset = {vid for vid, v in self.vertices.items() if v.kind == BOUNDARY}
        if set(self.boundary) != bset or len(self.boundary) != len(bset):
            raise ValueError("boundary order must list the boundary vertices exactly once")

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.boundary)

    def internal_vertices(self) -> list[Vertex]:
        return [v for v in self.vertices.values() if v.kind == INTERNAL]

    def degree(self, vid: int) -> int:
        return sum(self.edges[e].m for e in self.rotation[vid])

    def simple_degree(self, vid: int) -> int:
        return len(self.rotation[vid])

    def boundary_label(self, vid: int) -> int:
        """1-based clockwise label of a boundary vertex."""
        return self.boundary.index(vid) + 1

    def boundary_vertex(self, label: int) -> int:
        return self.boundary[label - 1]

    def is_standard_type(self) -> bool:
        return all(self.vertices[b].color == BLACK and self.degree(b) == 1
                   for b in self.boundary)

    def white_black_counts(self) -> tuple[int, int]:
        w = sum(1 for v in self.internal_vertices() if v.color == WHITE)
        b = sum(1 for v in self.internal_vertices() if v.color == BLACK)
        return w, b

    def plucker_degree(self) -> Fraction:
        if not self.is_standard_type():
            raise ValueError("Pluecker degree is defined for standard type")
        return Fraction(self.n, self.r)

    def components(self) -> list[set[int]]:
        parent = {vid: vid for vid in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges.values():
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
        comps: dict[int, set[int]] = {}
        for vid in self.vertices:
            comps.setdefault(find(vid), set()).add(vid)
        return list(comps.values())

    def isolated_components(self) -> list[set[int]]:
        return [c for c in self.components()
                if not any(self.vertices[v].kind == BOUNDARY for v in c)]

    def next_vertex_id(self) -> int:
        return max(self.vertices, default=-1) + 1

    def next_edge_id(self) -> int:
        return max(self.edges, default=-1) + 1

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "boundary": list(self.boundary),
            "vertices": [{"id": v.id, "color": v.color, "kind": v.kind}
                         for v in sorted(self.vertices.values(), key=lambda v: v.id)],
            "edges": [{"id": e.id, "u": e.u, "v": e.v, "m": e.m}
                      for e in sorted(self.edges.values(), key=lambda e: e.id)],
            "rotation": {str(vid): list(rot) for vid, rot in sorted(self.rotation.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "HourglassGraph":
        return cls(
            data["r"],
            [Vertex(v["id"], v["color"], v["kind"]) for v in data["vertices"]],
            [Edge(e["id"], e["u"], e["v"], e["m"]) for e in data["edges"]],
            {int(k): tuple(rot) for k, rot in data["rotation"].items()},
            data["boundary"],
        )


# -- face tracing ---------------------------------------------------------

# Darts are (entry, head): entry is ("e", edge_id) or ("a", arc_index) and
# head is the vertex the dart points at.  The disk boundary circle enters
# as virtual arcs between consecutive boundary vertices.


def _augmented_rotation(G: HourglassGraph):
    rot = {vid: [("e", e) for e in G.rotation[vid]] for vid in G.vertices}
    n = G.n
    if n >= 2:  # a single boundary vertex needs no arcs to close the circle
        for j in range(n):
            vid = G.boundary[j]
            rot[vid] = [("a", j), *rot[vid], ("a", (j - 1) % n)]
    return rot


def _trace_orbits(G: HourglassGraph, rot):
    n = G.n
    index = {vid: {entry: i for i, entry in enumerate(entries)}
             for vid, entries in rot.items()}

    def dart_ends(entry):
        if entry[0] == "e":
            e = G.edges[entry[1]]
            return e.u, e.v
        j = entry[1]
        return G.boundary[j], G.boundary[(j + 1) % n]

    darts = []
    for vid, entries in rot.items():
        for entry in entries:
            darts.append((entry, vid))
    seen = set()
    orbits = []
    for start in darts:
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            entry, head = cur
            entries = rot[head]
            nxt = entries[(index[head][entry] + 1) % len(entries)]
            a, b = dart_ends(nxt)
            cur = (nxt, b if a == head else a)
        orbits.append(orbit)
    return orbits


@dataclass(frozen=True)
class Face:
    """An interior region: not adjacent to the disk boundary.  Darts run
    around the region with its interior on the left."""
    darts: tuple[tuple[int, int], ...]  # (edge_id, head_vertex)
    m_value: int

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(h for _, h in self.darts)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.darts)

    @property
    def is_square(self) -> bool:
        return len(self.darts) == 4 and len(set(self.vertex_ids)) == 4


def faces(G: HourglassGraph) -> list[Face]:
    """Interior faces traced from the rotation system; the lacunae inside
    hourglass edges never appear since strands are not separate edges."""
    rot = _augmented_rotation(G)
    out = []
    for orbit in _trace_orbits(G, rot):
        if any(entry[0] == "a" for entry, _ in orbit):
            continue
        if any(G.vertices[h].kind == BOUNDARY for _, h in orbit):
            continue
        darts = [(entry[1], h) for entry, h in orbit]
        k = darts.index(min(darts))
        darts = tuple(darts[k:] + darts[:k])
        out.append(Face(darts, sum(G.edges[e].m for e, _ in darts)))
    out.sort(key=lambda f: f.darts)
    return out


# -- validation -----------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    violations: list[str]
    properties: dict = field(default_factory=dict)


def validate(G: HourglassGraph) -> ValidationReport:
    bad: list[str] = []
    for e in G.edges.values():
        if G.vertices[e.u].color == G.vertices[e.v].color:
            bad.append(f"edge {e.id} is not bipartite")
        if e.m < 1:
            bad.append(f"edge {e.id} has multiplicity {e.m}")
    for v in G.internal_vertices():
        if G.degree(v.id) != G.r:
            bad.append(f"internal vertex {v.id} has degree {G.degree(v.id)} != r={G.r}")
    for b in G.boundary:
        if G.simple_degree(b) != 1:
            bad.append(f"boundary vertex {b} has simple degree {G.simple_degree(b)}")
    # planarity: face count must match Euler's formula on the arc-augmented graph
    rot = _augmented_rotation(G)
    n_orbits = len(_trace_orbits(G, rot))
    aug_edges = len(G.edges) + (G.n if G.n >= 2 else 0)
    comps = G.components()
    if G.n >= 2:
        bcomp = [c for c in comps if any(G.vertices[v].kind == BOUNDARY for v in c)]
        n_comp = len(comps) - len(bcomp) + 1  # boundary circle ties its components together
    else:
        n_comp = len(comps)
    expected = 1 + n_comp + aug_edges - len(G.vertices)
    if n_orbits != expected:
        bad.append(f"face tracing gives {n_orbits} regions, Euler expects {expected}; "
                   "rotation system is not a disk embedding")
    props: dict = {}
    std = G.is_standard_type()
    props["standard_type"] = std
    props["white_black_counts"] = G.white_black_counts()
    if std:
        if G.n % G.r:
            bad.append(f"boundary size {G.n} not divisible by r={G.r}")
        else:
            props["plucker_degree"] = G.n // G.r
    return ValidationReport(not bad, bad, props)


# -- builders -------------------------------------------------------------

def star_graph(r: int) -> HourglassGraph:
    """One white centre joined by simple edges to r black boundary vertices."""
    center = 0
    verts = [Vertex(center, WHITE, INTERNAL)]
    edges = []
    rot = {center: list(range(r))}
    boundary = []
    for j in range(r):
        vid = j + 1
        verts.append(Vertex(vid, BLACK, BOUNDARY))
        edges.append(Edge(j, center, vid, 1))
        rot[vid] = [j]
        boundary.append(vid)
    return HourglassGraph(r, verts, edges, rot, boundary)


def standalone_square(r: int, ms: Sequence[int]) -> HourglassGraph:
    """The restriction of a square face with edge multiplicities ms to its
    own disk: the 4-cycle plus one boundary claw per corner, coloured by
    the corner's (cut-off) neighbours."""
    m1, m2, m3, m4 = ms
    if min(ms) < 1:
        raise ValueError("face multiplicities must be positive")
    corner_claws = [r - m4 - m1, r - m1 - m2, r - m2 - m3, r - m3 - m4]
    if min(corner_claws) < 0:
        raise ValueError(f"multiplicities {ms} exceed degree r={r} at a corner")
    W1, B1, W2, B2 = 0, 1, 2, 3
    verts = [Vertex(W1, WHITE, INTERNAL), Vertex(B1, BLACK, INTERNAL),
             Vertex(W2, WHITE, INTERNAL), Vertex(B2, BLACK, INTERNAL)]
    f1, f2, f3, f4 = 0, 1, 2, 3
    edges = [Edge(f1, W1, B1, m1), Edge(f2, B1, W2, m2),
             Edge(f3, W2, B2, m3), Edge(f4, B2, W1, m4)]
    rot = {W1: [], B1: [], W2: [], B2: []}
    boundary = []
    next_v, next_e = 4, 4
    claw_colors = [BLACK, WHITE, BLACK, WHITE]

    def claw(corner, color, count):
        nonlocal next_v, next_e
        ids = []
        for _ in range(count):
            verts.append(Vertex(next_v, color, BOUNDARY))
            edges.append(Edge(next_e, corner, next_v, 1))
            rot[next_v] = [next_e]
            boundary.append(next_v)
            ids.append(next_e)
            next_v += 1
            next_e += 1
        return ids

    rot[W1] = claw(W1, claw_colors[0], corner_claws[0]) + [f1, f4]
    rot[B1] = [f1] + claw(B1, claw_colors[1], corner_claws[1]) + [f2]
    rot[W2] = [f2] + claw(W2, claw_colors[2], corner_claws[2]) + [f3]
    rot[B2] = [f4, f3] + claw(B2, claw_colors[3], corner_claws[3])
    return HourglassGraph(r, verts, edges, rot, boundary)


# -- restriction ----------------------------------------------------------

def restrict(G: HourglassGraph, keep: Iterable[int]) -> HourglassGraph:
    """Sub-hourglass plabic graph induced by a Jordan curve around ``keep``.

    Cut m-hourglasses become claws of m new boundary vertices coloured by
    the outside endpoint.  Raises if no simple closed curve can separate
    the selection while meeting each edge at most once.
    """
    keep = set(keep)
    if not keep or not keep <= {v.id for v in G.internal_vertices()}:
        raise ValueError("selection must be a nonempty set of internal vertices")
    if G.isolated_components():
        raise ValueError("restriction requires a graph without isolated components")
    # every vertex outside the selection must reach the disk boundary
    # without passing through it, else it would be trapped inside the curve
    outside = {vid for vid in G.vertices if vid not in keep}
    reached = {vid for vid in outside if G.vertices[vid].kind == BOUNDARY}
    frontier = list(reached)
    adj: dict[int, list[int]] = {vid: [] for vid in outside}
    for e in G.edges.values():
        if e.u in outside and e.v in outside:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
    while frontier:
        u = frontier.pop()
        for w in adj[u]:
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    if reached != outside:
        raise ValueError("selection would trap vertices inside the curve")

    cut = [e for e in G.edges.values() if (e.u in keep) != (e.v in keep)]
    inner = [e for e in G.edges.values() if e.u in keep and e.v in keep]
    if not cut:
        raise ValueError("selection has no cut edges; nothing to bound the disk")

    # trace around the selection: stubs replace the outside endpoints
    stub_of = {e.id: ("stub", e.id) for e in cut}
    rot = {}
    for vid in keep:
        rot[vid] = [("e", eid) for eid in G.rotation[vid]]
    for e in cut:
        rot[stub_of[e.id]] = [("e", e.id)]

    def endpoint_inside(e: Edge) -> int:
        return e.u if e.u in keep else e.v

    def dart_ends(entry):
        e = G.edges[entry[1]]
        if e.id in stub_of:
            return endpoint_inside(e), stub_of[e.id]
        return e.u, e.v

    index = {vid: {entry: i for i, entry in enumerate(entries)}
             for vid, entries in rot.items()}
    seen = set()
    stub_orbits = []
    for e in cut:
        start = (("e", e.id), stub_of[e.id])
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            entry, head = cur
            entries = rot[head]
            nxt = entries[(index[head][entry] + 1) % len(entries)]
            a, b = dart_ends(nxt)
            cur = (nxt, b if a == head else a)
        stub_orbits.append(orbit)
    if len(stub_orbits) != 1:
        raise ValueError("cut edges do not form a single contiguous block; "
                         "selection is not curve-separable")

    cut_order = [entry[1] for entry, head in stub_orbits[0]
                 if isinstance(head, tuple)]
    # deterministic start: prefer the cut edge attached to the least original
    # boundary label, else the least edge id
    def start_key(eid):
        e = G.edges[eid]
        out = e.v if e.u in keep else e.u
        if G.vertices[out].kind == BOUNDARY:
            return (0, G.boundary_label(out))
        return (1, eid)

    k = cut_order.index(min(cut_order, key=start_key))
    cut_order = cut_order[k:] + cut_order[:k]

    verts = [G.vertices[vid] for vid in keep]
    edges = [Edge(e.id, e.u, e.v, e.m) for e in inner]
    new_rot = {vid: [] for vid in keep}
    boundary = []
    next_v = max(G.vertices) + 1
    next_e = max(G.edges) + 1
    claw_edges: dict[int, list[int]] = {}
    for eid in cut_order:
        e = G.edges[eid]
        vin = endpoint_inside(e)
        vout = e.other(vin)
        color = G.vertices[vout].color
        ids = []
        for _ in range(e.m):
            verts.append(Vertex(next_v, color, BOUNDARY))
            edges.append(Edge(next_e, vin, next_v, 1))
            new_rot[next_v] = [next_e]
            boundary.append(next_v)
            ids.append(next_e)
            next_v += 1
            next_e += 1
        claw_edges[eid] = ids
    for vid in keep:
        out = []
        for eid in G.rotation[vid]:
            if eid in claw_edges and endpoint_inside(G.edges[eid]) == vid:
                out.extend(claw_edges[eid])
            elif G.edges[eid].u in keep and G.edges[eid].v in keep:
                out.append(eid)
        new_rot[vid] = out
    return HourglassGraph(G.r, verts, edges, new_rot, boundary)


# -- contraction moves ----------------------------------------------------

def contraction_sites(G: HourglassGraph) -> list[tuple[int, int]]:
    """Adjacent internal pairs removable by a contraction move: either an
    isolated full-multiplicity dumbbell, or a zig-zag pair of simple degree
    2 whose outer edges can be fused."""
    sites = []
    for e in G.edges.values():
        u, v = e.u, e.v
        if G.vertices[u].kind != INTERNAL or G.vertices[v].kind != INTERNAL:
            continue
        du, dv = G.simple_degree(u), G.simple_degree(v)
        if du == 1 and dv == 1:
            sites.append((min(u, v), max(u, v)))
        elif du == 2 and dv == 2:
            eu = next(x for x in G.rotation[u] if x != e.id)
            ev = next(x for x in G.rotation[v] if x != e.id)
            if eu == ev:
                continue  # parallel 2-gon, not contractible
            x = G.edges[eu].other(u)
            y = G.edges[ev].other(v)
            if x == y or x in (u, v) or y in (u, v):
                continue
            sites.append((min(u, v), max(u, v)))
    return sorted(set(sites))


def apply_contraction(G: HourglassGraph, site: tuple[int, int]) -> HourglassGraph:
    u, v = site
    if (u, v) not in contraction_sites(G) and (v, u) not in contraction_sites(G):
        raise ValueError(f"({u},{v}) is not a contraction site")
    e_uv = next(e for e in G.edges.values()
                if {e.u, e.v} == {u, v})
    if G.simple_degree(u) == 1:
        verts = [w for w in G.vertices.values() if w.id not in (u, v)]
        edges = [e for e in G.edges.values() if e.id != e_uv.id]
        rot = {vid: r for vid, r in G.rotation.items() if vid not in (u, v)}
        return HourglassGraph(G.r, verts, edges, rot, G.boundary)
    eu = next(x for x in G.rotation[u] if x != e_uv.id)
    ev = next(x for x in G.rotation[v] if x != e_uv.id)
    x = G.edges[eu].other(u)
    y = G.edges[ev].other(v)
    if G.edges[eu].m != G.edges[ev].m:
        raise AssertionError("outer multiplicities differ at a contraction site")
    new_id = G.next_edge_id()
    new_edge = Edge(new_id, x, y, G.edges[eu].m)
    verts = [w for w in G.vertices.values() if w.id not in (u, v)]
    edges = [e for e in G.edges.values() if e.id not in (e_uv.id, eu, ev)] + [new_edge]
    rot = {}
    for vid, r in G.rotation.items():
        if vid in (u, v):
            continue
        rot[vid] = tuple(new_id if eid in (eu, ev) else eid for eid in r)
    return HourglassGraph(G.r, verts, edges, rot, G.boundary)


def is_contracted(G: HourglassGraph) -> bool:
    return not contraction_sites(G)


def normalize_contracted(G: HourglassGraph) -> HourglassGraph:
    """Apply contraction moves at the least site until none applies."""
    while True:
        sites = contraction_sites(G)
        if not sites:
            return G
        G = apply_contraction(G, sites[0])


# -- square move ----------------------------------------------------------

def square_move_sites(G: HourglassGraph) -> list[Face]:
    out = []
    for f in faces(G):
        if not f.is_square:
            continue
        if f.m_value != G.r:
            continue
        blacks = [h for h in f.vertex_ids if G.vertices[h].color == BLACK]
        if any(G.vertices[h].kind != INTERNAL for h in f.vertex_ids):
            continue
        if any(G.simple_degree(h) != 3 for h in blacks):
            continue
        out.append(f)
    return out


def apply_square_move(G: HourglassGraph, face: Face,
                      contract: bool = True) -> HourglassGraph:
    """Rewrite the square face: the two black corners migrate across the
    face, fusing their pairs of face edges into new hourglasses.  The
    external multiplicities around the picture are preserved."""
    if not face.is_square:
        raise ValueError("square move needs a square face")
    if face.m_value != G.r:
        raise ValueError(f"face multiplicities sum to {face.m_value}, need r={G.r}")
    heads = list(face.vertex_ids)
    eids = list(face.edge_ids)  # eids[k] joins heads[k-1] to heads[k]
    k = next(i for i, h in enumerate(heads) if G.vertices[h].color == BLACK)
    v0, v1, v2, v3 = (heads[(k + t) % 4] for t in range(4))
    e1, e2, e3, e4 = (eids[(k + t + 1) % 4] for t in range(4))
    if any(G.vertices[b].kind != INTERNAL or G.simple_degree(b) != 3
           for b in (v0, v2)):
        raise ValueError("black corners must be internal and trivalent")
    a, b, c, d = (G.edges[e].m for e in (e1, e2, e3, e4))
    g1 = next(x for x in G.rotation[v0] if x not in (e1, e4))
    g2 = next(x for x in G.rotation[v2] if x not in (e2, e3))
    X1 = G.edges[g1].other(v0)
    X2 = G.edges[g2].other(v2)

    nA = G.next_vertex_id()
    nB = nA + 1
    base = G.next_edge_id()
    h1 = Edge(base, v1, nA, a + b)
    p1 = Edge(base + 1, nA, X1, c)
    p2 = Edge(base + 2, nA, X2, d)
    h2 = Edge(base + 3, v3, nB, c + d)
    q1 = Edge(base + 4, nB, X1, b)
    q2 = Edge(base + 5, nB, X2, a)

    dead_edges = {e1, e2, e3, e4, g1, g2}
    verts = [w for w in G.vertices.values() if w.id not in (v0, v2)]
    verts += [Vertex(nA, BLACK, INTERNAL), Vertex(nB, BLACK, INTERNAL)]
    edges = [e for e in G.edges.values() if e.id not in dead_edges]
    edges += [h1, p1, p2, h2, q1, q2]

    def splice(rot: Sequence[int], old: Sequence[int], new: Sequence[int]) -> list[int]:
        """Replace the cyclically consecutive run ``old`` by ``new``."""
        rot = list(rot)
        i = rot.index(old[0])
        doubled = rot[i:] + rot[:i]
        if doubled[:len(old)] != list(old):
            raise ValueError("expected edges are not consecutive in the rotation")
        return list(new) + doubled[len(old):]

    rot = {}
    for vid, r in G.rotation.items():
        if vid in (v0, v2):
            continue
        rr = list(r)
        if vid == v1:
            rr = splice(rr, [e1, e2], [h1.id])
        if vid == v3:
            rr = splice(rr, [e3, e4], [h2.id])
        if vid == X1:
            # clockwise at X1 the nB-side edge precedes the nA-side edge;
            # at X2 it is the other way around (the new blacks sit on
            # opposite sides of the face)
            rr = splice(rr, [g1], [q1.id, p1.id])
        if vid == X2:
            rr = splice(rr, [g2], [p2.id, q2.id])
        rot[vid] = rr
    rot[nA] = [h1.id, p1.id, p2.id]
    rot[nB] = [q1.id, h2.id, q2.id]
    out = HourglassGraph(G.r, verts, edges, rot, G.boundary)
    return normalize_contracted(out) if contract else out


# -- claws and ears -------------------------------------------------------

@dataclass(frozen=True)
class Ear:
    """Three claws around a trivalent black vertex; the middle claw's
    centre has no edges beyond its claw and the ossicle."""
    center_a: int
    center_b: int
    center_c: int
    v: int
    ossicle_a: int
    ossicle_b: int
    ossicle_c: int
    p: int
    q: int
    arc_a: tuple[int, ...]  # boundary labels of claw A, clockwise
    arc_b: tuple[int, ...]
    arc_c: tuple[int, ...]


def claw_runs(G: HourglassGraph, white: int) -> list[list[int]]:
    """Maximal cyclic runs of consecutive boundary labels joined to
    ``white`` by simple edges."""
    labels = sorted(G.boundary_label(G.edges[e].other(white))
                    for e in G.rotation[white]
                    if G.edges[e].m == 1
                    and G.vertices[G.edges[e].other(white)].kind == BOUNDARY)
    if not labels:
        return []
    n = G.n
    label_set = set(labels)
    runs = []
    for start in labels:
        if (start - 2) % n + 1 in label_set:
            continue
        run = [start]
        while (run[-1] % n) + 1 in label_set and len(run) < len(labels):
            run.append((run[-1] % n) + 1)
        runs.append(run)
    if not runs:  # the whole boundary circle is one claw
        runs = [labels]
    return runs


def find_ears(G: HourglassGraph) -> list[Ear]:
    ears = []
    for v in G.internal_vertices():
        if v.color != BLACK or G.simple_degree(v.id) != 3:
            continue
        rot = G.rotation[v.id]
        nbrs = [G.edges[e].other(v.id) for e in rot]
        if len(set(nbrs)) != 3:
            continue
        if any(G.vertices[u].kind != INTERNAL or G.vertices[u].color != WHITE
               for u in nbrs):
            continue
        for shift in range(3):
            e_a, e_b, e_c = (rot[(shift + t) % 3] for t in range(3))
            ear = _check_ear(G, v.id, e_a, e_b, e_c)
            if ear is not None:
                ears.append(ear)
    return ears


def _check_ear(G: HourglassGraph, v: int, e_a: int, e_b: int, e_c: int) -> Optional[Ear]:
    a = G.edges[e_a].other(v)
    b = G.edges[e_b].other(v)
    c = G.edges[e_c].other(v)
    # the tip's centre carries only its claw and the ossicle
    others = [e for e in G.rotation[b] if e != e_b]
    if not others:
        return None
    for e in others:
        w = G.edges[e].other(b)
        if G.vertices[w].kind != BOUNDARY or G.edges[e].m != 1:
            return None
    runs_b = claw_runs(G, b)
    if len(runs_b) != 1 or len(runs_b[0]) != len(others):
        return None
    arc_b = runs_b[0]
    n = G.n
    q = G.edges[e_a].m
    p = G.edges[e_c].m
    before = (arc_b[0] - 2) % n + 1
    after = (arc_b[-1] % n) + 1
    arc_a = next((run for run in claw_runs(G, a) if run[-1] == before), None)
    arc_c = next((run for run in claw_runs(G, c) if run[0] == after), None)
    if arc_a is None or arc_c is None:
        return None
    if len(arc_a) < p or len(arc_c) < q:
        return None
    # rotation sanity: tip claw sweeps the arc then the ossicle
    rot_b = list(G.rotation[b])
    i = rot_b.index(e_b)
    cyc = rot_b[i + 1:] + rot_b[:i]
    if [G.boundary_label(G.edges[e].other(b)) for e in cyc] != arc_b:
        return None
    # ossicle at a directly follows A's last claw edge; at c it precedes C's first
    rot_a = list(G.rotation[a])
    last_a = next(e for e in rot_a
                  if G.vertices[G.edges[e].other(a)].kind == BOUNDARY
                  and G.boundary_label(G.edges[e].other(a)) == arc_a[-1])
    if rot_a[(rot_a.index(last_a) + 1) % len(rot_a)] != e_a:
        return None
    rot_c = list(G.rotation[c])
    first_c = next(e for e in rot_c
                   if G.vertices[G.edges[e].other(c)].kind == BOUNDARY
                   and G.boundary_label(G.edges[e].other(c)) == arc_c[0])
    if rot_c[(rot_c.index(first_c) - 1) % len(rot_c)] != e_c:
        return None
    return Ear(a, b, c, v, e_a, e_b, e_c, p, q,
               tuple(arc_a), tuple(arc_b), tuple(arc_c))


def remove_ear(G: HourglassGraph, ear: Ear) -> HourglassGraph:
    """Delete the tip claw, its centre and the ossicles; the tip's boundary
    positions are rewired, the first q to claw A and the last p to claw C."""
    p, q = ear.p, ear.q
    tip_edges = [e for e in G.rotation[ear.center_b] if e != ear.ossicle_b]
    dead = {ear.ossicle_a, ear.ossicle_b, ear.ossicle_c, *tip_edges}
    verts = [w for w in G.vertices.values()
             if w.id not in (ear.center_b, ear.v)]
    edges = [e for e in G.edges.values() if e.id not in dead]
    next_e = G.next_edge_id()
    new_a, new_c = [], []
    rot_updates: dict[int, list[int]] = {}
    for t, label in enumerate(ear.arc_b):
        bv = G.boundary_vertex(label)
        target = ear.center_a if t < q else ear.center_c
        e = Edge(next_e, target, bv, 1)
        edges.append(e)
        rot_updates[bv] = [next_e]
        (new_a if t < q else new_c).append(next_e)
        next_e += 1
    rot = {}
    for vid, r in G.rotation.items():
        if vid in (ear.center_b, ear.v):
            continue
        if vid in rot_updates:
            rot[vid] = rot_updates[vid]
        elif vid == ear.center_a:
            rot[vid] = [x for e in r for x in (new_a if e == ear.ossicle_a else [e])]
        elif vid == ear.center_c:
            rot[vid] = [x for e in r for x in (new_c if e == ear.ossicle_c else [e])]
        else:
            rot[vid] = list(r)
    return HourglassGraph(G.r, verts, edges, rot, G.boundary)


def is_proper_ear(G: HourglassGraph, ear: Ear) -> bool:
    """Proper: neither endpoint of the barrier arc of the recovered
    matching lies in the tip claw.  Defined for Fraser graphs."""
    from .fraser import recover_matching

    M = recover_matching(G)
    barrier = {1, M.partner(1)}
    return not barrier & set(ear.arc_b)


# -- symmetries and canonical form ----------------------------------------

def rotate(G: HourglassGraph) -> HourglassGraph:
    """Shift boundary labels one step: new b_j is old b_{j+1}."""
    if not G.is_standard_type():
        raise ValueError("rotation is defined for standard type")
    return HourglassGraph(G.r, G.vertices.values(), G.edges.values(),
                          G.rotation, G.boundary[1:] + G.boundary[:1])


def reflect(G: HourglassGraph) -> HourglassGraph:
    """Mirror the disk: all rotations reverse and labels run backwards."""
    if not G.is_standard_type():
        raise ValueError("reflection is defined for standard type")
    rot = {vid: tuple(reversed(r)) for vid, r in G.rotation.items()}
    return HourglassGraph(G.r, G.vertices.values(), G.edges.values(),
                          rot, tuple(reversed(G.boundary)))


def canonical_form(G: HourglassGraph) -> bytes:
    """Byte string invariant under internal relabelling, fixing the
    labelled boundary; deterministic traversal seeded at b_1."""
    order: dict[int, int] = {}
    anchor: dict[int, int] = {}
    queue = []
    for vid in G.boundary:
        order[vid] = len(order)
        anchor[vid] = G.rotation[vid][0]
        queue.append(vid)
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        rot = G.rotation[u]
        i = rot.index(anchor[u])
        for eid in rot[i:] + rot[:i]:
            w = G.edges[eid].other(u)
            if w not in order:
                order[w] = len(order)
                anchor[w] = eid
                queue.append(w)
    if len(order) != len(G.vertices):
        raise ValueError("canonical form requires every component to touch the boundary")
    entries = []
    for u in queue:
        rot = G.rotation[u]
        i = rot.index(anchor[u])
        entries.append((
            G.vertices[u].color,
            G.vertices[u].kind,
            tuple((G.edges[eid].m, order[G.edges[eid].other(u)])
                  for eid in rot[i:] + rot[:i]),
        ))
    return repr((G.r, G.n, tuple(entries))).encode()


def isomorphic(G: HourglassGraph, H: HourglassGraph) -> bool:
    """Boundary-label-preserving isomorphism of embedded graphs."""
    return canonical_form(G) == canonical_form(H)
