import pytest
from pytest import raises

from bnchain import (
    BnParams,
    ChainSpec,
    Filling,
    Rectangle,
    chain_supports_filling,
    enumerate_fillings,
    find_filling,
    max_distance_bound,
    max_distance_oracle,
    separation_limit,
    validate_positive,
)
from bnchain.errors import BudgetExceededError


def test_enumerate_small():
    fillings = list(enumerate_fillings(Rectangle(1, 1, 1), ChainSpec(1)))
    assert fillings == [Filling([[1]], 1)]

    # standard tableaux of the 2x2 square
    fillings = list(enumerate_fillings(Rectangle(2, 2, 4), ChainSpec(4)))
    assert [f.rows() for f in fillings] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]

    fillings = list(enumerate_fillings(Rectangle(2, 2, 3), ChainSpec(3)))
    assert fillings == []
    fillings = list(enumerate_fillings(Rectangle(2, 2, 3), ChainSpec(3, {2: 2})))
    assert [f.rows() for f in fillings] == [((1, 2), (2, 3))]


def test_enumerate_is_admissible():
    chain = ChainSpec(7, {i: 2 for i in range(1, 8)})
    count = 0
    for f in enumerate_fillings(BnParams(7, 2, 6), chain):
        assert validate_positive(f, chain)
        count += 1
    assert count > 0


def test_enumerate_fails():
    with raises(BudgetExceededError) as err:
        enumerate_fillings(Rectangle(6, 6, 36), ChainSpec(36))
    assert err.value.cells == 36
    # a larger budget is accepted (the generator is lazy)
    enumerate_fillings(Rectangle(6, 6, 36), ChainSpec(36), budget=36)

    with raises(ValueError):
        enumerate_fillings(Rectangle(2, 2, 4), ChainSpec(5))
    with raises(TypeError):
        enumerate_fillings((2, 2, 4), ChainSpec(4))


@pytest.mark.parametrize(
    "alpha, beta", [(a, b) for a in range(2, 7) for b in range(a, 7)]
)
def test_distance_bound_matches_oracle(alpha, beta):
    for e in range(0, separation_limit(alpha, beta) + 1):
        assert max_distance_oracle(alpha, beta, e) == max_distance_bound(alpha, beta, e)


def test_distance_oracle_small():
    assert max_distance_oracle(1, 3, 0) == 0
    assert max_distance_oracle(1, 3, 1) is None
    assert max_distance_oracle(2, 2, 1) == 2
    assert max_distance_oracle(2, 2, 2) is None


def test_find_filling():
    assert find_filling(Rectangle(2, 2, 3), ChainSpec(3)) is None
    f = find_filling(Rectangle(2, 2, 3), ChainSpec(3, {2: 2}))
    assert f.rows() == ((1, 2), (2, 3))

    # no pair of boxes of a 3x4 rectangle is 6 apart
    chain = ChainSpec(11, {6: 6})
    assert not chain_supports_filling(BnParams(11, 2, 9), chain)
    # but the 2x6 rectangle has one
    f = find_filling(BnParams(11, 1, 6), chain)
    assert validate_positive(f, chain)
    assert f.occurrences()[6] == [(1, 2), (6, 1)]


if __name__ == "__main__":
    test_enumerate_small()
    test_enumerate_is_admissible()
    test_enumerate_fails()
    test_distance_oracle_small()
    test_find_filling()
