import pytest

from hourglass.explorer import (BoundedExplorationError, class_statistics,
                                move_class, tamari_check)
from hourglass.fraser import fraser_map
from hourglass.matchings import catalan
from hourglass.tableaux import column_superstandard, superstandard


def test_two_claw_class_is_singleton():
    mc = move_class(fraser_map(column_superstandard(4), "fan"))
    assert len(mc.members) == 1
    assert mc.edges == set()


def test_superstandard_class_sizes():
    for r, size in ((4, 2), (5, 5), (6, 14)):
        mc = move_class(fraser_map(superstandard(r, 2), "fan"))
        assert len(mc.members) == size == catalan(r - 2)


def test_class_cap_raises_with_partial():
    G = fraser_map(superstandard(6, 2), "fan")
    with pytest.raises(BoundedExplorationError) as exc:
        move_class(G, cap=3)
    assert len(exc.value.partial.members) >= 4


def test_tamari_pentagon_cycle():
    rep = tamari_check(5)
    assert rep["ok"]
    assert rep["class_size"] == 5
    assert rep["flip_edge_count"] == 5  # the associahedron of a pentagon is a 5-cycle


def test_tamari_square_and_hexagon():
    assert tamari_check(4)["ok"]
    rep = tamari_check(6)
    assert rep["ok"]
    assert rep["class_size"] == 14
    assert rep["flip_edge_count"] == 21


def test_tamari_rejects_small_r():
    with pytest.raises(ValueError):
        tamari_check(2)


def test_class_statistics_small():
    for r in (2, 3):
        rep = class_statistics(r)
        assert rep["ok"]
        assert rep["tableaux"] == catalan(r)
        assert rep["classes_disjoint"] and rep["trips_distinct"]
