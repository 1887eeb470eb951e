import pytest

from app.models.series import DimTable, TruncatedSeries
from app.services import series
from app.utils.exceptions import InvalidInputError

YM3 = [3, 3, 5, 10, 24, 50, 120, 270, 640, 1500, 3600, 8610, 20880, 50700, 124024, 304290, 750120]


def test_moebius_dimensions_for_three_generators():
    assert series.lie_dims_moebius(3, 17).as_list(17) == YM3


def test_moebius_dimensions_for_two_generators():
    assert series.lie_dims_moebius(2, 6).as_list(6) == [2, 1, 0, 0, 0, 0]


def test_power_sums_recurrence():
    assert series.power_sums(3, 4) == [2, 3, 7, 18, 47]
    assert series.power_sums(2, 3) == [2, 2, 2, 2]


def test_hilbert_series():
    assert series.hilbert_ym(3, 4).as_list() == [1, 3, 9, 24, 64]
    assert series.hilbert_ym(2, 4).as_list() == [1, 2, 4, 6, 9]


def test_necklace_count_matches_lyndon_count():
    assert series.necklace_count(3, 4) == 18
    assert series.necklace_count(2, 5) == 6


def test_w_series():
    assert series.w_series(3, 6).as_list() == [0, 0, 3, 5, 7, 9, 11]
    assert series.w_series(2, 5).as_list() == [0, 0, 1, 0, 0, 0]


def test_special_grading_doubles_degrees():
    s = series.special_grading(series.w_series(2, 3))
    assert s.degree == 6
    assert s.as_list() == [0, 0, 0, 0, 1, 0, 0]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_freeness_and_pbw_identities(n):
    assert series.freeness_identity(n, 20)
    assert series.pbw_check(n, series.lie_dims_moebius(n, 20), 20)


def test_euler_characteristic_series():
    # (1 - 3t + 3t^3 - t^4)/(1-t)^3
    assert series.euler_characteristic_series(3, 3).as_list() == [1, 0, -3, -5]


def test_rejects_single_generator():
    with pytest.raises(InvalidInputError):
        series.lie_dims_moebius(1, 4)


def test_truncated_series_arithmetic():
    s = TruncatedSeries.from_polynomial([1, -1], 4)
    assert (s.inverse() * s) == TruncatedSeries.one(4)
    assert (s ** -2).as_list() == [1, 2, 3, 4, 5]
    with pytest.raises(ArithmeticError):
        TruncatedSeries.from_polynomial([2, 1], 3).inverse()


def test_dim_table_defaults_to_zero():
    table = DimTable(n=3, values={1: 3})
    assert table[5] == 0


@pytest.mark.filterwarnings("error")
def test_moebius_formula_emits_no_warnings():
    assert series.lie_dims_moebius(4, 6).as_list(6) == [4, 6, 16, 45, 144, 440]
