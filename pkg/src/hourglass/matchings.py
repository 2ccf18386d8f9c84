"""Noncrossing perfect matchings and weighted polygon dissections.

These are the intermediate stages between a two-column tableau and its
hourglass plabic graph: tableau -> matching -> weighted dissection of an
s-gon -> weighted triangulation.  Claw sets are the cyclic intervals cut
out by the short arcs of the matching; each polygon vertex remembers the
circle positions of its claw so the graph stage can attach boundary
vertices in the right places.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Optional, Sequence

from .tableaux import RectTableau


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class NoncrossingMatching:
    """Fixed-point-free noncrossing involution on {1,..,2r}.

    ``pairing[i-1]`` is the partner of i.
    """
    pairing: tuple[int, ...]

    def __post_init__(self):
        n = len(self.pairing)
        if n == 0 or n % 2:
            raise ValueError("matching needs a positive even number of points")
        for i in range(1, n + 1):
            j = self.pairing[i - 1]
            if j == i or not 1 <= j <= n or self.pairing[j - 1] != i:
                raise ValueError("pairing is not a fixed-point-free involution")
        for a, b in self.arcs():
            for c, d in self.arcs():
                if a < c < b < d:
                    raise ValueError(f"arcs ({a},{b}) and ({c},{d}) cross")

    @property
    def n_points(self) -> int:
        return len(self.pairing)

    def partner(self, i: int) -> int:
        return self.pairing[i - 1]

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs as (opener, closer) pairs, sorted by opener."""
        return [(i, self.pairing[i - 1])
                for i in range(1, len(self.pairing) + 1)
                if self.pairing[i - 1] > i]

    def openers(self) -> list[int]:
        return [a for a, _ in self.arcs()]

    def closers(self) -> list[int]:
        return sorted(b for _, b in self.arcs())

    @classmethod
    def from_arcs(cls, n: int, arcs: Sequence[tuple[int, int]]) -> "NoncrossingMatching":
        pairing = [0] * n
        for a, b in arcs:
            pairing[a - 1] = b
            pairing[b - 1] = a
        return cls(tuple(pairing))

    def to_json(self) -> dict:
        return {"n": self.n_points, "pairs": [list(p) for p in self.arcs()]}

    @classmethod
    def from_json(cls, data: dict) -> "NoncrossingMatching":
        return cls.from_arcs(data["n"], [tuple(p) for p in data["pairs"]])


def matching_from_tableau(T: RectTableau) -> NoncrossingMatching:
    """Stack pairing of a two-column tableau: first column entries open,
    second column entries close."""
    if T.cols != 2:
        raise ValueError("defined only for shape r x 2")
    openers = set(T.column(1))
    stack: list[int] = []
    pairing = [0] * T.n
    for x in range(1, T.n + 1):
        if x in openers:
            stack.append(x)
        else:
            a = stack.pop()
            pairing[a - 1] = x
            pairing[x - 1] = a
    return NoncrossingMatching(tuple(pairing))


def tableau_from_matching(M: NoncrossingMatching) -> RectTableau:
    return RectTableau.from_columns([M.openers(), M.closers()])


def claw_left_endpoints(M: NoncrossingMatching) -> list[int]:
    """Positions i whose arc joins i to its clockwise neighbour i+1 (mod n)."""
    n = M.n_points
    return [i for i in range(1, n + 1) if M.partner(i) == i % n + 1]


def claw_sets(M: NoncrossingMatching) -> list[list[int]]:
    """The cyclic intervals (i_j, i_{j+1}] between consecutive short-arc
    left endpoints; they partition {1,..,2r}."""
    n = M.n_points
    lefts = claw_left_endpoints(M)
    out = []
    for j, i_j in enumerate(lefts):
        i_next = lefts[(j + 1) % len(lefts)]
        claw = []
        pos = i_j % n + 1
        while True:
            claw.append(pos)
            if pos == i_next:
                break
            pos = pos % n + 1
        out.append(claw)
    return out


@dataclass(frozen=True)
class WeightedPolygonGraph:
    """Weighted dissection (or triangulation) of an s-gon.

    ``boundary_weights[j-1]`` is the weight of the boundary edge between
    polygon vertices j and j+1 (cyclically); ``diagonals`` holds (a, b, w)
    with a < b.  When the polygon was produced from a matching, claw sizes
    and offsets record how its vertices sit on the 2r-point circle.
    A 2-gon is stored with two parallel boundary edges and no diagonals.
    """
    s: int
    boundary_weights: tuple[int, ...]
    diagonals: tuple[tuple[int, int, int], ...]
    claw_sizes: Optional[tuple[int, ...]] = None
    claw_offsets: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.s < 2:
            raise ValueError("polygon needs at least 2 vertices")
        if len(self.boundary_weights) != self.s:
            raise ValueError("need one boundary weight per polygon edge")
        if any(w < 0 for w in self.boundary_weights):
            raise ValueError("negative boundary weight")
        seen = set()
        for a, b, w in self.diagonals:
            if not (1 <= a < b <= self.s) or w < 0:
                raise ValueError(f"bad diagonal ({a},{b},{w})")
            if b - a == 1 or (a == 1 and b == self.s) or self.s == 2:
                raise ValueError(f"({a},{b}) is a boundary edge, not a diagonal")
            if (a, b) in seen:
                raise ValueError(f"duplicate diagonal ({a},{b})")
            seen.add((a, b))
        for a, b, _ in self.diagonals:
            for c, d, _ in self.diagonals:
                if a < c < b < d:
                    raise ValueError(f"diagonals ({a},{b}) and ({c},{d}) cross")

    @property
    def total_weight(self) -> int:
        return sum(self.boundary_weights) + sum(w for _, _, w in self.diagonals)

    @property
    def n_points(self) -> int:
        if self.claw_sizes is None:
            raise ValueError("polygon carries no claw data")
        return sum(self.claw_sizes)

    def diagonal_pairs(self) -> set[tuple[int, int]]:
        return {(a, b) for a, b, _ in self.diagonals}

    def diagonal_weight(self, a: int, b: int) -> int:
        a, b = min(a, b), max(a, b)
        for x, y, w in self.diagonals:
            if (x, y) == (a, b):
                return w
        raise KeyError(f"no diagonal ({a},{b})")

    def boundary_weight(self, j: int) -> int:
        """Weight of the boundary edge between vertices j and j+1."""
        return self.boundary_weights[j - 1]

    def vertex_weight(self, j: int) -> int:
        w = self.boundary_weights[j - 1] + self.boundary_weights[j - 2]
        w += sum(wt for a, b, wt in self.diagonals if j in (a, b))
        return w

    def claw_members(self, j: int) -> list[int]:
        """Circle positions of the j-th claw, in clockwise order."""
        n = self.n_points
        start = self.claw_offsets[j - 1]
        return [(start - 1 + t) % n + 1 for t in range(self.claw_sizes[j - 1])]

    @property
    def is_triangulation(self) -> bool:
        if self.s == 2:
            return not self.diagonals
        return len(self.diagonals) == self.s - 3

    def regions(self) -> list[tuple[int, ...]]:
        return polygon_regions(self.s, self.diagonal_pairs())

    def triangles(self) -> list[tuple[int, int, int]]:
        if not self.is_triangulation:
            raise ValueError("not a triangulation")
        if self.s == 2:
            return []
        return [tuple(reg) for reg in self.regions()]

    def to_json(self) -> dict:
        return {"s": self.s,
                "boundary_weights": list(self.boundary_weights),
                "diagonals": [{"a": a, "b": b, "w": w} for a, b, w in self.diagonals]}

    @classmethod
    def from_json(cls, data: dict) -> "WeightedPolygonGraph":
        return cls(data["s"], tuple(data["boundary_weights"]),
                   tuple(sorted((d["a"], d["b"], d["w"]) for d in data["diagonals"])))


def polygon_regions(s: int, diagonal_pairs: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Faces of the s-gon cut by noncrossing diagonals, each as a vertex
    tuple in polygon cyclic order."""

    def rec(cycle: tuple[int, ...], diags: list[tuple[int, int]]):
        if not diags:
            return [cycle]
        a, b = diags[0]
        ia, ib = cycle.index(a), cycle.index(b)
        if ia > ib:
            ia, ib = ib, ia
        side1 = cycle[ia:ib + 1]
        side2 = cycle[ib:] + cycle[:ia + 1]
        set1, set2 = set(side1), set(side2)
        d1 = [d for d in diags[1:] if d[0] in set1 and d[1] in set1]
        d2 = [d for d in diags[1:] if d[0] in set2 and d[1] in set2]
        if len(d1) + len(d2) != len(diags) - 1:
            raise ValueError("crossing diagonals")
        return rec(side1, d1) + rec(side2, d2)

    if s == 2:
        return [(1, 2)]
    return rec(tuple(range(1, s + 1)), sorted(diagonal_pairs))


def dissection(M: NoncrossingMatching) -> WeightedPolygonGraph:
    """Merge each claw set to a polygon vertex; edge weights count the
    matching arcs between the two claw sets."""
    n = M.n_points
    claws = claw_sets(M)
    s = len(claws)
    claw_of = {}
    for j, claw in enumerate(claws, start=1):
        for pos in claw:
            claw_of[pos] = j
    weights: dict[tuple[int, int], int] = {}
    for a, b in M.arcs():
        ja, jb = claw_of[a], claw_of[b]
        if ja == jb:
            raise AssertionError("matching arc inside a single claw set")
        key = (min(ja, jb), max(ja, jb))
        weights[key] = weights.get(key, 0) + 1
    sizes = tuple(len(c) for c in claws)
    offsets = tuple(c[0] for c in claws)
    if s == 2:
        poly = WeightedPolygonGraph(2, (n // 2, 0), (), sizes, offsets)
    else:
        boundary = []
        diagonals = []
        for (a, b), w in sorted(weights.items()):
            if b - a == 1 or (a == 1 and b == s):
                continue
            diagonals.append((a, b, w))
        for j in range(1, s + 1):
            k = j % s + 1
            boundary.append(weights.get((min(j, k), max(j, k)), 0))
        poly = WeightedPolygonGraph(s, tuple(boundary), tuple(diagonals), sizes, offsets)
    for j in range(1, s + 1):
        if poly.vertex_weight(j) != sizes[j - 1]:
            raise AssertionError("vertex weight differs from claw cardinality")
    if poly.total_weight != n // 2:
        raise AssertionError("dissection weight is not r")
    return poly


def _fan_diagonals(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    apex = min(cycle)
    i = cycle.index(apex)
    ordered = cycle[i:] + cycle[:i]
    return [(min(apex, u), max(apex, u)) for u in ordered[2:-1]]


def _all_triangulations(cycle: tuple[int, ...]) -> list[frozenset[tuple[int, int]]]:
    if len(cycle) <= 3:
        return [frozenset()]
    first, last = cycle[0], cycle[-1]
    out = []
    for t in range(1, len(cycle) - 1):
        apex = cycle[t]
        extra = []
        if t > 1:
            extra.append((min(first, apex), max(first, apex)))
        if t < len(cycle) - 2:
            extra.append((min(apex, last), max(apex, last)))
        for left in _all_triangulations(cycle[:t + 1]):
            for right in _all_triangulations(cycle[t:]):
                out.append(frozenset(extra) | left | right)
    return out


def triangulate(D: WeightedPolygonGraph, strategy: str = "fan"):
    """Complete a dissection to a triangulation with weight-0 diagonals.

    ``fan`` adds, in every non-triangular region, the fan from the least
    vertex of that region; ``all`` enumerates every completion.
    """
    regions = [reg for reg in D.regions() if len(reg) >= 4]
    if strategy == "fan":
        added = [d for reg in regions for d in _fan_diagonals(reg)]
        return replace(D, diagonals=tuple(sorted(
            list(D.diagonals) + [(a, b, 0) for a, b in added])))
    if strategy == "all":
        choices: list[list[frozenset[tuple[int, int]]]] = [
            _all_triangulations(reg) for reg in regions]
        results: list[WeightedPolygonGraph] = []

        def build(idx: int, acc: list[tuple[int, int]]):
            if idx == len(choices):
                results.append(replace(D, diagonals=tuple(sorted(
                    list(D.diagonals) + [(a, b, 0) for a, b in acc]))))
                return
            for combo in choices[idx]:
                build(idx + 1, acc + sorted(combo))

        build(0, [])
        return results
    raise ValueError(f"unknown strategy {strategy!r}")


def flip_zero_diagonal(Tr: WeightedPolygonGraph, diag: tuple[int, int]) -> WeightedPolygonGraph:
    """Replace a weight-0 diagonal by the opposite diagonal of the
    quadrilateral formed by its two triangles."""
    a, b = min(diag), max(diag)
    if not Tr.is_triangulation:
        raise ValueError("flips are defined on triangulations")
    if (a, b) not in Tr.diagonal_pairs():
        raise ValueError(f"({a},{b}) is not a diagonal")
    if Tr.diagonal_weight(a, b) != 0:
        raise ValueError(f"diagonal ({a},{b}) has positive weight")
    adjacent = [tri for tri in Tr.triangles() if a in tri and b in tri]
    if len(adjacent) != 2:
        raise AssertionError("diagonal not on exactly two triangles")
    c, d = ((set(adjacent[0]) | set(adjacent[1])) - {a, b})
    new = (min(c, d), max(c, d), 0)
    diagonals = tuple(sorted([t for t in Tr.diagonals if (t[0], t[1]) != (a, b)] + [new]))
    return replace(Tr, diagonals=diagonals)


def matching_from_polygon(P: WeightedPolygonGraph) -> NoncrossingMatching:
    """The unique noncrossing matching whose dissection is P.

    P must carry claw data.  Works by collapsing ear triangles: each
    collapse undoes one triangle of the web, rerouting two adjacent nested
    arc families into one.
    """
    if P.claw_sizes is None or P.claw_offsets is None:
        raise ValueError("polygon carries no claw data")
    Tr = P if P.is_triangulation else triangulate(P, "fan")
    n = sum(P.claw_sizes)

    cycle = tuple(range(1, Tr.s + 1))
    claws = {j: list(Tr.claw_members(j)) for j in cycle}
    edge_w: dict[frozenset[int], int] = {}
    if Tr.s >= 3:
        for j in cycle:
            edge_w[frozenset((j, j % Tr.s + 1))] = Tr.boundary_weights[j - 1]
        for a, b, w in Tr.diagonals:
            edge_w[frozenset((a, b))] = w
    triangles = [set(t) for t in Tr.triangles()] if Tr.s >= 3 else []

    def solve(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
        if len(cycle) == 2:
            u, v = cycle
            cu, cv = claws[u], claws[v]
            if len(cu) != len(cv):
                raise ValueError("2-gon claws of unequal size")
            return [(cu[-1 - t], cv[t]) for t in range(len(cu))]
        # ear triangle: three consecutive cycle vertices forming a triangle
        for idx in range(len(cycle)):
            x = cycle[idx - 1]
            y = cycle[idx]
            z = cycle[(idx + 1) % len(cycle)]
            if {x, y, z} in triangles:
                break
        else:
            raise ValueError("no ear triangle; polygon data inconsistent")
        p = edge_w[frozenset((x, y))]
        q = edge_w[frozenset((y, z))]
        if p < 1 or q < 1:
            raise ValueError("zero-weight polygon boundary edge")
        beta = claws[y]
        if len(beta) != p + q:
            raise ValueError("claw size differs from incident weight")
        alpha = claws[x][-p:] if p else []
        gamma = claws[z][:q]
        # collapse: y disappears, x-z becomes a boundary edge
        triangles.remove({x, y, z})
        if len(cycle) > 3:
            edge_w[frozenset((x, z))] = edge_w[frozenset((x, z))] + p + q
        claws[x] = claws[x] + beta[:q]
        claws[z] = beta[q:] + claws[z]
        sub = solve(tuple(v for v in cycle if v != y))
        # reroute the nested (p+q)-family back into two lobe/flap families
        xs = alpha + beta[:q]
        ys = beta[q:] + gamma
        nested = {(min(xs[k], ys[p + q - 1 - k]), max(xs[k], ys[p + q - 1 - k]))
                  for k in range(p + q)}
        kept = []
        for a, b in sub:
            key = (min(a, b), max(a, b))
            if key in nested:
                nested.discard(key)
            else:
                kept.append((a, b))
        if nested:
            raise ValueError("expected nested family missing; not a valid polygon")
        kept += [(alpha[k], beta[p - 1 - k]) for k in range(p)]
        kept += [(beta[p + t], gamma[q - 1 - t]) for t in range(q)]
        return kept

    return NoncrossingMatching.from_arcs(n, [tuple(sorted(arc)) for arc in solve(cycle)])
