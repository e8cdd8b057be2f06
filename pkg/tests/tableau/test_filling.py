import numpy as np
from pytest import raises

from bnchain import (
    ChainSpec,
    Filling,
    grid_distance_sum,
    minimal_torsion_chain,
    transpose,
    validate_positive,
)
from bnchain.errors import (
    ImpossibleFillingError,
    OutOfRangeError,
    UnsupportedMultiplicityError,
)


TORSION_ROWS = [[3, 5], [4, 8], [5, 9], [6, 10]]


def test_filling_basics():
    f = Filling(TORSION_ROWS, 10)
    assert (f.alpha, f.beta, f.g) == (2, 4, 10)
    assert f.index_at(1, 2) == 5
    assert f.index_at(3, 1) == 5
    assert f.rows() == tuple(tuple(row) for row in TORSION_ROWS)
    assert f.distinct_indices() == [3, 4, 5, 6, 8, 9, 10]
    assert f.occurrences()[5] == [(1, 2), (3, 1)]
    with raises(IndexError):
        f.index_at(5, 1)

    # immutable
    with raises(ValueError):
        f.cells[0, 0] = 1
    rows = np.array(TORSION_ROWS)
    f = Filling(rows, 10)
    rows[0, 0] = 1
    assert f.index_at(1, 1) == 3

    with raises(ValueError):
        Filling([1, 2, 3], 3)
    with raises(ValueError):
        Filling(np.zeros((0, 2)), 3)


def test_filling_repeats():
    f = Filling(TORSION_ROWS, 10)
    records = f.repeats()
    assert len(records) == 1
    assert records[0].index == 5
    assert records[0].occurrences == ((1, 2), (3, 1))
    assert records[0].pair_distances == (3,)
    assert grid_distance_sum(f) == 3

    f = Filling([[1, 2, 3], [2, 3, 4], [3, 4, 5]], 5)
    with raises(UnsupportedMultiplicityError):
        grid_distance_sum(f)


def test_transpose():
    f = Filling(TORSION_ROWS, 10)
    t = transpose(f)
    assert (t.alpha, t.beta) == (4, 2)
    assert t.rows() == ((3, 4, 5, 6), (5, 8, 9, 10))
    assert transpose(t) == f
    with raises(TypeError):
        transpose(TORSION_ROWS)


def test_chain_spec():
    chain = ChainSpec(10, {6: 3, 5: 3})
    assert chain.special == {5: 3, 6: 3}
    assert list(chain.special) == [5, 6]
    assert chain.torsion(5) == 3
    assert chain.torsion(1) is None
    assert chain == ChainSpec(10, {5: 3, 6: 3})
    assert chain != ChainSpec(10, {5: 3})

    with raises(OutOfRangeError):
        ChainSpec(10, {11: 2})
    with raises(OutOfRangeError):
        ChainSpec(10, {5: 1})


def test_validate_positive():
    f = Filling(TORSION_ROWS, 10)
    assert validate_positive(f, ChainSpec(10, {5: 3}))

    report = validate_positive(f, ChainSpec(10))
    assert not report
    assert report.kinds() == {"generic-repeat"}
    assert report.violations[0].cells == ((1, 2), (3, 1))

    report = validate_positive(f, ChainSpec(10, {5: 2}))
    assert report.kinds() == {"torsion-divisibility"}

    report = validate_positive(f, ChainSpec(9, {5: 3}))
    assert report.kinds() == {"chain-mismatch", "index-range"}
    # index 10 names no component of a 9-component chain
    (bad,) = [v for v in report.violations if v.kind == "index-range"]
    assert bad.cells == ((4, 2),)
    # a longer chain only mismatches
    assert validate_positive(f, ChainSpec(11, {5: 3})).kinds() == {"chain-mismatch"}

    f = Filling([[1, 1], [2, 3]], 3)
    assert "row-order" in validate_positive(f, ChainSpec(3)).kinds()
    f = Filling([[1, 2], [1, 3]], 3)
    assert "column-order" in validate_positive(f, ChainSpec(3)).kinds()


def test_minimal_torsion_chain():
    f = Filling(TORSION_ROWS, 10)
    assert minimal_torsion_chain(f) == ChainSpec(10, {5: 3})

    # three occurrences at distance 2 and 2
    f = Filling([[1, 2, 3], [2, 3, 4], [3, 4, 5]], 5)
    assert minimal_torsion_chain(f) == ChainSpec(5, {2: 2, 3: 2, 4: 2})
    assert validate_positive(f, minimal_torsion_chain(f))

    with raises(ImpossibleFillingError):
        minimal_torsion_chain(Filling([[2, 1]], 2))


if __name__ == "__main__":
    test_filling_basics()
    test_filling_repeats()
    test_transpose()
    test_chain_spec()
    test_validate_positive()
    test_minimal_torsion_chain()
