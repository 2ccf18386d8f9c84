"""Move-equivalence classes under square moves, and the Tamari instance."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .fraser import fraser_map, recover_polygon
from .hpgraph import HourglassGraph, apply_square_move, canonical_form, square_move_sites
from .matchings import _all_triangulations, catalan
from .tableaux import standard_tableaux, superstandard
from .trips import trip_all

DEFAULT_CLASS_CAP = 100_000


def _class_cap() -> int:
    return int(os.environ.get("HOURGLASS_MAX_CLASS", DEFAULT_CLASS_CAP))


class BoundedExplorationError(RuntimeError):
    """The class grew past the cap; carries the partial exploration."""

    def __init__(self, partial: "MoveClass"):
        super().__init__(f"move class exceeded cap of {len(partial.members)} members")
        self.partial = partial


@dataclass
class MoveClass:
    members: dict[bytes, HourglassGraph]
    edges: set[frozenset[bytes]] = field(default_factory=set)


def move_class(G: HourglassGraph, cap: int | None = None) -> MoveClass:
    """BFS closure of G under square moves (with implicit contraction),
    deduplicated by canonical form.  Trip permutations are asserted to be
    constant across the class."""
    cap = cap if cap is not None else _class_cap()
    trips0 = trip_all(G)
    start = canonical_form(G)
    mc = MoveClass({start: G})
    frontier = [start]
    while frontier:
        frontier.sort()
        next_frontier = []
        for key in frontier:
            cur = mc.members[key]
            for face in square_move_sites(cur):
                new = apply_square_move(cur, face)
                nkey = canonical_form(new)
                mc.edges.add(frozenset((key, nkey)))
                if nkey in mc.members:
                    continue
                if trip_all(new) != trips0:
                    raise AssertionError("square move changed trip permutations")
                mc.members[nkey] = new
                next_frontier.append(nkey)
                if len(mc.members) > cap:
                    raise BoundedExplorationError(mc)
        frontier = next_frontier
    mc.edges = {e for e in mc.edges if len(e) == 2}
    return mc


def tamari_check(r: int) -> dict:
    """The class of the superstandard r x 2 web is the set of
    triangulations of an r-gon, with square moves matching diagonal
    flips."""
    if r < 3:
        raise ValueError("need r >= 3")
    G = fraser_map(superstandard(r, 2), "fan")
    mc = move_class(G)
    expected = catalan(r - 2)

    diag_of: dict[bytes, frozenset] = {}
    for key, H in mc.members.items():
        poly = recover_polygon(H)
        if any(w != 0 for _, _, w in poly.diagonals):
            raise AssertionError("superstandard class member with weighted diagonal")
        diag_of[key] = frozenset((a, b) for a, b, _ in poly.diagonals)

    all_tris = {frozenset(t) for t in _all_triangulations(tuple(range(1, r + 1)))}
    bijection_ok = (len(set(diag_of.values())) == len(diag_of)
                    and set(diag_of.values()) == all_tris)

    move_edges = {frozenset((diag_of[a], diag_of[b])) for a, b in mc.edges}
    flip_edges = set()
    for t1 in all_tris:
        for t2 in all_tris:
            if t1 != t2 and len(t1 & t2) == len(t1) - 1:
                flip_edges.add(frozenset((t1, t2)))
    flips_ok = move_edges == flip_edges

    degree_ok = all(
        sum(1 for e in mc.edges if key in e) == max(r - 3, 0)
        for key in mc.members)

    return {
        "r": r,
        "class_size": len(mc.members),
        "expected_size": expected,
        "size_ok": len(mc.members) == expected,
        "bijection_ok": bijection_ok,
        "flip_graph_ok": flips_ok,
        "regular_ok": degree_ok,
        "flip_edge_count": len(move_edges),
        "ok": (len(mc.members) == expected and bijection_ok
               and flips_ok and degree_ok),
    }


def class_statistics(r: int, cap: int | None = None) -> dict:
    """Enumerate the classes of all r x 2 tableaux: they partition their
    union, one class per tableau, with trip permutations constant on each
    class and distinct across classes."""
    seen: dict[bytes, int] = {}
    trips_seen: dict[tuple, int] = {}
    sizes = []
    disjoint = True
    trips_distinct = True
    for idx, T in enumerate(standard_tableaux(r, 2)):
        G = fraser_map(T, "fan")
        mc = move_class(G, cap)
        sizes.append(len(mc.members))
        for key in mc.members:
            if key in seen and seen[key] != idx:
                disjoint = False
            seen[key] = idx
        trips = trip_all(G)
        if trips in trips_seen and trips_seen[trips] != idx:
            trips_distinct = False
        trips_seen[trips] = idx
    n_tableaux = idx + 1
    return {
        "r": r,
        "tableaux": n_tableaux,
        "expected_classes": catalan(r),
        "class_sizes": sizes,
        "classes_disjoint": disjoint,
        "trips_distinct": trips_distinct,
        "total_graphs": len(seen),
        "ok": (disjoint and trips_distinct and n_tableaux == catalan(r)
               and len(trips_seen) == n_tableaux),
    }
