import pytest
from pytest import raises

from bnchain import (
    SpotLayout,
    corner_filling,
    enumerate_fillings,
    fill_layout,
    grid_distance_sum,
    max_distance_bound,
    minimal_torsion_chain,
    optimal_separation_filling,
    separation_layout,
    separation_limit,
    staircase_filling,
    staircase_layout,
    validate_positive,
)
from bnchain.errors import ImpossibleFillingError


def doubled_cells(f):
    return sorted(cell for record in f.repeats() for cell in record.occurrences)


def assert_admissible(f):
    report = validate_positive(f, minimal_torsion_chain(f))
    assert report.valid, report.violations


@pytest.mark.parametrize(
    "name, alpha, beta, e",
    [
        ("separation_5x6_e7", 5, 6, 7),
        ("separation_5x6_e12", 5, 6, 12),
        ("separation_5x5_e11", 5, 5, 11),
    ],
)
def test_separation_goldens(document, name, alpha, beta, e):
    expected = document(name)
    assert_admissible(expected)
    assert grid_distance_sum(expected) == max_distance_bound(alpha, beta, e)

    f = optimal_separation_filling(alpha, beta, e)
    assert (f.alpha, f.beta, f.g) == (alpha, beta, alpha * beta - e)
    assert doubled_cells(f) == doubled_cells(expected)
    assert grid_distance_sum(f) == grid_distance_sum(expected)


@pytest.mark.parametrize(
    "name, alpha, beta, g",
    [
        ("staircase_4x8_g21", 4, 8, 21),
        ("staircase_4x8_g17", 4, 8, 17),
        ("staircase_5x7_g19", 5, 7, 19),
    ],
)
def test_staircase_goldens(document, name, alpha, beta, g):
    expected = document(name)
    assert_admissible(expected)
    layout = staircase_layout(alpha, beta, g)
    reserved = sorted(layout.bottom_cells() + layout.top_cells())
    assert doubled_cells(expected) == reserved

    f = staircase_filling(alpha, beta, g)
    assert doubled_cells(f) == reserved
    assert f.distinct_indices() == list(range(1, g + 1))


def test_staircase_square_is_corner_filling(document):
    f = staircase_filling(5, 5, 15)
    assert f == corner_filling(4)
    assert f == document("corner_r4")
    assert grid_distance_sum(f) == max_distance_bound(5, 5, 10)


def test_separation_attains_bound():
    for alpha in range(2, 7):
        for beta in range(alpha, 7):
            for e in range(0, separation_limit(alpha, beta) + 1):
                f = optimal_separation_filling(alpha, beta, e)
                assert_admissible(f)
                assert len(f.repeats()) == e
                assert grid_distance_sum(f) == max_distance_bound(alpha, beta, e)


def test_staircase_sweep():
    for alpha in range(2, 6):
        for beta in range(alpha, 31 // alpha + 1):
            low = (alpha * beta + 3) // 2
            for g in range(low, alpha * beta + 1):
                f = staircase_filling(alpha, beta, g)
                assert_admissible(f)
                assert f.distinct_indices() == list(range(1, g + 1))
                assert len(f.repeats()) == alpha * beta - g


def test_built_fillings_are_enumerated():
    count = 0
    for alpha in range(2, 5):
        for beta in range(alpha, 12 // alpha + 1):
            built = [
                optimal_separation_filling(alpha, beta, e)
                for e in range(0, separation_limit(alpha, beta) + 1)
            ]
            low = (alpha * beta + 3) // 2
            built += [
                staircase_filling(alpha, beta, g) for g in range(low, alpha * beta)
            ]
            for f in built:
                chain = minimal_torsion_chain(f)
                assert f in list(enumerate_fillings(f.shape, chain))
                count += 1
    assert count > 10


def test_fill_layout():
    f = fill_layout(separation_layout(2, 4, 1))
    assert f.rows() == ((1, 4), (2, 5), (3, 6), (4, 7))

    with raises(TypeError):
        fill_layout((2, 4, 1))

    # a reservation that no monotone filling can match
    layout = SpotLayout(2, 2, 1, 0, 0, (0,), (2,), (1,), "separation")
    with raises(ImpossibleFillingError):
        fill_layout(layout)


if __name__ == "__main__":
    test_separation_attains_bound()
    test_staircase_sweep()
    test_built_fillings_are_enumerated()
    test_fill_layout()
