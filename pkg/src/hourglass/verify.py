"""Executable acceptance checks: each theorem-backed property at desk
scale, exact equality throughout.  Used by the test suite and by the
``verify all`` CLI command."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .explorer import class_statistics, move_class, tamari_check
from .fraser import fraser_map, recover_matching, recover_tableau
from .hpgraph import (HourglassGraph, apply_square_move, find_ears, is_contracted,
                      normalize_contracted, reflect, rotate, square_move_sites,
                      standalone_square, star_graph)
from .matchings import (NoncrossingMatching, catalan, matching_from_tableau,
                        tableau_from_matching)
from .permutation import Permutation, long_cycle, longest_element
from .sieving import csp_check, eval_root_of_unity, promotion_fixed_counts, q_hook_poly
from .tableaux import (RectTableau, column_tableau, evacuation, prom_all,
                       promotion, standard_tableaux)
from .trips import fully_reduced, trip_all, trip_perm

FIG3_TABLEAU = RectTableau.from_columns([[1, 2, 4, 5, 8, 11, 13],
                                         [3, 6, 7, 9, 10, 12, 14]])

GOLDEN_PROMS = {
    1: Permutation([2, 6, 4, 5, 9, 7, 8, 12, 10, 11, 14, 13, 3, 1]),
    2: Permutation([4, 7, 5, 9, 12, 8, 10, 14, 11, 13, 3, 1, 6, 2]),
    3: Permutation([5, 9, 8, 12, 14, 10, 11, 1, 13, 3, 6, 2, 7, 4]),
}

GOLDEN_MATCHING = NoncrossingMatching.from_arcs(
    14, [(1, 10), (2, 3), (4, 7), (5, 6), (8, 9), (11, 12), (13, 14)])


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(fn):
    def run(*args, **kwargs) -> CriterionResult:
        t0 = time.perf_counter()
        name, ok, detail = fn(*args, **kwargs)
        return CriterionResult(name, ok, detail, time.perf_counter() - t0)
    return run


def _two_column_sweep(max_r: int):
    for r in range(2, max_r + 1):
        for T in standard_tableaux(r, 2):
            yield r, T


@_timed
def criterion_trip_equals_prom(max_r: int = 6):
    count = 0
    for r, T in _two_column_sweep(max_r):
        if trip_all(fraser_map(T, "fan")) != prom_all(T):
            return ("trip=prom", False, f"mismatch at r={r}, T={T.entries}")
        count += 1
    return ("trip=prom", True, f"{count} tableaux, r<={max_r}, exact")


@_timed
def criterion_golden_values():
    proms = prom_all(FIG3_TABLEAU)
    for i, expected in GOLDEN_PROMS.items():
        if proms[i - 1] != expected:
            return ("golden-values", False, f"prom_{i} mismatch")
        if proms[7 - i - 1] != expected.inverse():
            return ("golden-values", False, f"prom_{7 - i} is not prom_{i}^-1")
    if matching_from_tableau(FIG3_TABLEAU) != GOLDEN_MATCHING:
        return ("golden-values", False, "matching mismatch")
    G = fraser_map(FIG3_TABLEAU, "fan")
    if trip_perm(G, 4)(1) != 8:
        return ("golden-values", False, f"trip_4(G)(1) = {trip_perm(G, 4)(1)} != 8")
    return ("golden-values", True, "example promotion permutations and trip_4(1)=8")


@_timed
def criterion_fully_reduced(max_r: int = 6):
    count = 0
    for r, T in _two_column_sweep(max_r):
        G = fraser_map(T, "fan")
        if not fully_reduced(G):
            return ("fully-reduced", False, f"not fully reduced at r={r}")
        if not is_contracted(G):
            return ("fully-reduced", False, f"not contracted at r={r}")
        count += 1
    return ("fully-reduced", True, f"{count} webs fully reduced and contracted")


@_timed
def criterion_square_faces(max_r: int = 6):
    checked = 0
    for r in range(2, max_r + 1):
        for total in range(4, r + 3):
            for ms in itertools.product(range(1, total + 1), repeat=4):
                if sum(ms) != total:
                    continue
                if min(r - ms[i] - ms[(i + 1) % 4] for i in range(4)) < 0:
                    continue
                sq = standalone_square(r, ms)
                if fully_reduced(sq) != (total <= r):
                    return ("square-criterion", False,
                            f"r={r}, ms={ms}: reduced != (m(F)<=r)")
                checked += 1
    return ("square-criterion", True, f"{checked} squares match m(F)<=r exactly")


@_timed
def criterion_square_move(max_r: int = 6):
    moves = 0
    for r, T in _two_column_sweep(max_r):
        G = fraser_map(T, "fan")
        trips = trip_all(G)
        for face in square_move_sites(G):
            H = apply_square_move(G, face)
            if trip_all(H) != trips:
                return ("square-move-invariance", False,
                        f"trip change at r={r}, T={T.entries}")
            moves += 1
    return ("square-move-invariance", True, f"{moves} square moves preserve trip_*")


@_timed
def criterion_reconstruction(max_r: int = 6, star_max_r: int = 8):
    count = 0
    for r, T in _two_column_sweep(max_r):
        if recover_tableau(fraser_map(T, "fan")) != T:
            return ("reconstruction", False, f"round-trip failed at r={r}")
        count += 1
    for r in range(1, star_max_r + 1):
        S = star_graph(r)
        if recover_tableau(S) != column_tableau(r):
            return ("reconstruction", False, f"star recovery failed at r={r}")
        for i in range(1, r):
            for j in range(1, r + 1):
                if trip_perm(S, i)(j) != (j + i - 1) % r + 1:
                    return ("reconstruction", False, f"star trips wrong at r={r}")
    return ("reconstruction", True,
            f"{count} webs round-trip; stars recover through r={star_max_r}")


@_timed
def criterion_equivariance(max_r: int = 6):
    count = 0
    for r, T in _two_column_sweep(max_r):
        G = fraser_map(T, "fan")
        n = T.n
        sigma, w0 = long_cycle(n), longest_element(n)
        trips = trip_all(G)
        conj = tuple(p.conjugate(sigma) for p in trips)
        if trip_all(rotate(G)) != conj or conj != prom_all(promotion(T).result):
            return ("equivariance", False, f"rotation mismatch at r={r}")
        proms_evac = prom_all(evacuation(T))
        if trip_all(reflect(G)) != proms_evac:
            return ("equivariance", False, f"reflection mismatch at r={r}")
        proms = prom_all(T)
        flipped = tuple(w0 * proms[r - 1 - i - 1] * w0 for i in range(r - 1))
        if proms_evac != flipped:
            return ("equivariance", False, f"w0 conjugation mismatch at r={r}")
        count += 1
    return ("equivariance", True,
            f"{count} tableaux: rotation=promotion, reflection=evacuation")


@_timed
def criterion_tamari(max_r: int = 7):
    sizes = []
    for r in range(4, max_r + 1):
        rep = tamari_check(r)
        if not rep["ok"]:
            return ("tamari", False, f"r={r}: {rep}")
        sizes.append(rep["class_size"])
    expected = [catalan(r - 2) for r in range(4, max_r + 1)]
    return ("tamari", sizes == expected,
            f"superstandard class sizes {sizes}, flip graphs = associahedra")


@_timed
def criterion_ears(max_r: int = 6):
    count = 0
    for r, T in _two_column_sweep(max_r):
        G = fraser_map(T, "fan")
        if len(G.components()) > 1:
            continue  # the two-claw union is the exception
        M = recover_matching(G)
        barrier = {1, M.partner(1)}
        ears = find_ears(G)
        proper = [e for e in ears if not barrier & set(e.arc_b)]
        if not proper:
            return ("ears", False, f"no proper ear at r={r}, T={T.entries}")
        ear = proper[0]
        from .hpgraph import remove_ear
        H = remove_ear(G, ear)
        T_H = recover_tableau(H)
        expected = _collapse_matching(M, ear)
        if T_H != tableau_from_matching(expected):
            return ("ears", False, f"ear removal inconsistent at r={r}")
        count += 1
    return ("ears", True, f"{count} connected webs have proper ears, removal consistent")


def _collapse_matching(M: NoncrossingMatching, ear) -> NoncrossingMatching:
    """Matching surgery mirroring ear removal: the two adjacent nested
    lobe/flap families become one nested family."""
    p, q = ear.p, ear.q
    alpha = list(ear.arc_a[-p:])
    beta = list(ear.arc_b)
    gamma = list(ear.arc_c[:q])
    drop = {tuple(sorted((alpha[k], beta[p - 1 - k]))) for k in range(p)}
    drop |= {tuple(sorted((beta[p + t], gamma[q - 1 - t]))) for t in range(q)}
    xs = alpha + beta[:q]
    ys = beta[q:] + gamma
    add = [tuple(sorted((xs[k], ys[p + q - 1 - k]))) for k in range(p + q)]
    arcs = [a for a in ((min(x, y), max(x, y)) for x, y in M.arcs())
            if a not in drop]
    return NoncrossingMatching.from_arcs(M.n_points, arcs + add)


@_timed
def criterion_csp(max_r: int = 8):
    for r in range(1, max_r + 1):
        rep = csp_check(r, 2)
        if not rep["ok"]:
            return ("csp", False, f"shape {r}x2 fails: {rep['table']}")
    counts = promotion_fixed_counts(2, 2)
    f = q_hook_poly(2, 2)
    hand = [eval_root_of_unity(f, 4, k) for k in range(4)]
    if counts != [2, 0, 2, 0] or hand != [2, 0, 2, 0]:
        return ("csp", False, f"2x2 hand case: counts={counts}, values={hand}")
    return ("csp", True, f"promotion sieving exact for rx2, r<={max_r}")


@_timed
def criterion_class_partition(max_r: int = 5):
    for r in range(2, max_r + 1):
        rep = class_statistics(r)
        if not rep["ok"]:
            return ("class-partition", False, f"r={r}: {rep}")
    return ("class-partition", True,
            f"move classes partition, C_r classes, trips distinct, r<={max_r}")


def run_all(max_r: int = 6) -> list[CriterionResult]:
    small = min(max_r, 6)
    return [
        criterion_trip_equals_prom(small),
        criterion_golden_values(),
        criterion_fully_reduced(small),
        criterion_square_faces(small),
        criterion_square_move(small),
        criterion_reconstruction(small, star_max_r=max(max_r, 8)),
        criterion_equivariance(small),
        criterion_tamari(max_r=max(min(max_r + 1, 7), 4)),
        criterion_ears(small),
        criterion_csp(max_r=max(max_r, 8)),
        criterion_class_partition(min(max_r, 5)),
    ]
