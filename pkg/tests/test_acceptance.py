"""Acceptance gate: every theorem-level check at full desk scale, one test
per criterion, printing a pass/fail line each."""

from hourglass import verify


def _run(result):
    print(result.line())
    assert result.ok, result.detail


def test_criterion_01_trip_equals_prom():
    _run(verify.criterion_trip_equals_prom(max_r=6))


def test_criterion_02_golden_values():
    _run(verify.criterion_golden_values())


def test_criterion_03_fully_reduced_and_contracted():
    _run(verify.criterion_fully_reduced(max_r=6))


def test_criterion_04_square_criterion():
    _run(verify.criterion_square_faces(max_r=6))


def test_criterion_05_square_move_invariance():
    _run(verify.criterion_square_move(max_r=6))


def test_criterion_06_reconstruction():
    _run(verify.criterion_reconstruction(max_r=6, star_max_r=8))


def test_criterion_07_equivariance():
    _run(verify.criterion_equivariance(max_r=6))


def test_criterion_08_tamari():
    _run(verify.criterion_tamari(max_r=7))


def test_criterion_09_ears():
    _run(verify.criterion_ears(max_r=6))


def test_criterion_10_cyclic_sieving():
    _run(verify.criterion_csp(max_r=8))


def test_criterion_11_class_partition():
    _run(verify.criterion_class_partition(max_r=5))
