import pytest

from hourglass.matchings import catalan
from hourglass.permutation import Permutation, long_cycle, longest_element
from hourglass.tableaux import (RectTableau, column_superstandard, column_tableau,
                                evacuation, prom1_via_matching, prom_all,
                                prom_perm, promotion, promotion_power,
                                standard_tableaux, superstandard)

FIG3 = RectTableau.from_columns([[1, 2, 4, 5, 8, 11, 13],
                                 [3, 6, 7, 9, 10, 12, 14]])


def test_validation_rejects_bad_fillings():
    with pytest.raises(ValueError):
        RectTableau.from_rows([[1, 3], [2, 2]])
    with pytest.raises(ValueError):
        RectTableau.from_rows([[2, 1], [3, 4]])
    with pytest.raises(ValueError):
        RectTableau.from_rows([[1, 4], [2, 3]])  # column decreases


def test_promotion_hand_case():
    rec = promotion(RectTableau.from_rows([[1, 2], [3, 4]]))
    assert rec.result == RectTableau.from_rows([[1, 3], [2, 4]])
    assert rec.path[-1] == (2, 2)
    assert rec.row_crossing_values == {1: 4}


def test_promotion_orbit_of_example_tableau():
    # consecutive promotions as displayed in the orbit figure
    second = RectTableau.from_columns([[1, 3, 4, 7, 9, 10, 12],
                                       [2, 5, 6, 8, 11, 13, 14]])
    third = RectTableau.from_columns([[1, 2, 3, 6, 8, 9, 11],
                                      [4, 5, 7, 10, 12, 13, 14]])
    fourth = RectTableau.from_columns([[1, 2, 5, 7, 8, 10, 13],
                                       [3, 4, 6, 9, 11, 12, 14]])
    assert promotion(FIG3).result == second
    assert promotion(second).result == third
    assert promotion(third).result == fourth


def test_promotion_path_crosses_every_row_once():
    for T in standard_tableaux(4, 3):
        rec = promotion(T)
        assert sorted(rec.row_crossing_values) == [1, 2, 3]
        assert rec.path[-1] == (4, 3)


def test_single_column_fixed_by_promotion():
    T = column_tableau(5)
    assert promotion(T).result == T
    # the column's promotion permutations are the cyclic shifts j -> j+i
    proms = prom_all(T)
    assert [p.images for p in proms] == [
        tuple((j + i - 1) % 5 + 1 for j in range(1, 6)) for i in range(1, 5)]


def test_single_row_has_no_promotion_permutations():
    T = RectTableau.from_rows([[1, 2, 3, 4]])
    assert prom_all(T) == ()


def test_promotion_order_n_on_rectangles():
    for rows, cols in ((2, 2), (3, 2), (2, 4), (4, 2), (3, 3)):
        for T in standard_tableaux(rows, cols):
            assert promotion_power(T, rows * cols) == T


def test_evacuation_involution_and_rectangle_oracle():
    # independent oracle: on rectangles evacuation is rotation + complement
    for rows, cols in ((2, 2), (3, 2), (2, 3), (4, 2), (3, 3)):
        n = rows * cols
        for T in standard_tableaux(rows, cols):
            E = evacuation(T)
            assert evacuation(E) == T
            oracle = RectTableau(rows, cols, tuple(
                tuple(n + 1 - T.entries[rows - 1 - i][cols - 1 - j]
                      for j in range(cols)) for i in range(rows)))
            assert E == oracle


def test_evacuation_fixed_on_column():
    assert evacuation(column_tableau(6)) == column_tableau(6)


def test_prom_perm_golden_values():
    assert prom_perm(FIG3, 1) == Permutation(
        [2, 6, 4, 5, 9, 7, 8, 12, 10, 11, 14, 13, 3, 1])
    assert prom_perm(FIG3, 2) == Permutation(
        [4, 7, 5, 9, 12, 8, 10, 14, 11, 13, 3, 1, 6, 2])
    assert prom_perm(FIG3, 3) == Permutation(
        [5, 9, 8, 12, 14, 10, 11, 1, 13, 3, 6, 2, 7, 4])


def test_prom_perm_range_check():
    with pytest.raises(ValueError):
        prom_perm(FIG3, 7)
    with pytest.raises(ValueError):
        prom_perm(FIG3, 0)


def test_prom_inverse_pairing():
    proms = prom_all(FIG3)
    for i in range(1, 7):
        assert proms[i - 1].inverse() == proms[7 - i - 1]


def test_prom_conjugation_under_promotion():
    for T in standard_tableaux(3, 2):
        sigma = long_cycle(6)
        after = prom_all(promotion(T).result)
        before = prom_all(T)
        assert after == tuple(p.conjugate(sigma) for p in before)


def test_prom_evacuation_conjugation_flips_index():
    # prom_i(evac T) = w0 prom_{r-i}(T) w0; checked exhaustively
    for rows in (2, 3, 4):
        w0 = longest_element(rows * 2)
        for T in standard_tableaux(rows, 2):
            pe = prom_all(evacuation(T))
            ps = prom_all(T)
            assert pe == tuple(w0 * ps[rows - i - 2] * w0 for i in range(rows - 1))


def test_prom1_is_fpf_involution_for_two_rows():
    for cols in range(1, 6):
        for T in standard_tableaux(2, cols):
            p = prom_perm(T, 1)
            assert p == p.inverse()
            assert all(p(j) != j for j in range(1, 2 * cols + 1))


def test_prom1_via_matching_golden():
    assert prom1_via_matching(FIG3) == (2, 4, 5, 8, 12, 14)
    assert prom1_via_matching(RectTableau.from_rows([[1], [2]]).transpose()) == ()
    assert prom1_via_matching(RectTableau.from_rows([[1, 2], [3, 4]])) == (4,)


def test_prom1_via_matching_agrees_with_prom_perm():
    for rows in range(1, 8):
        for T in standard_tableaux(rows, 2):
            want = tuple(prom_perm(T, i)(1) for i in range(1, rows))
            assert prom1_via_matching(T) == want


def test_standard_tableaux_counts_are_catalan():
    for rows in range(1, 8):
        assert sum(1 for _ in standard_tableaux(rows, 2)) == catalan(rows)


def test_special_fillings():
    assert superstandard(3, 2) == RectTableau.from_rows([[1, 2], [3, 4], [5, 6]])
    assert column_superstandard(3) == RectTableau.from_rows([[1, 4], [2, 5], [3, 6]])


def test_json_round_trip():
    data = FIG3.to_json()
    assert RectTableau.from_json(data) == FIG3
