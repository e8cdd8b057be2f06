from itertools import combinations_with_replacement

import logging

import pytest
from pytest import raises

import bnchain

from bnchain import (
    EMBEDDED_SQUARE,
    EXACT_SQUARE,
    GENERIC_TAIL,
    BnParams,
    corner_filling,
    filling_to_series,
    maxrank_m2_certificate,
    maxrank_scope,
    minimal_torsion_chain,
    product_q_order,
    section_orders,
)
from bnchain.errors import OutOfRangeError


def test_corner_filling():
    f = corner_filling(1)
    assert f.rows() == ((1, 2), (2, 3))
    f = corner_filling(2)
    assert f.rows() == ((1, 2, 4), (2, 3, 5), (4, 5, 6))
    assert f.g == 6
    with raises(OutOfRangeError):
        corner_filling(0)


def test_section_orders_match_series():
    for r in range(1, 5):
        f = corner_filling(r)
        g = f.g
        series = filling_to_series(f, BnParams(g, r, g - 1), minimal_torsion_chain(f))
        for k in range(1, g + 1):
            u, v = series.vanishing(k)
            for i in range(1, r + 2):
                assert section_orders(r, k, i) == (u[i - 1], v[i - 1])


def test_maxrank_r1():
    cert = maxrank_m2_certificate(1)
    assert (cert.r, cert.g, cert.d) == (1, 3, 2)
    assert cert.scope == EXACT_SQUARE
    assert cert.eliminated() == [(1, 1), (1, 2), (2, 2)]
    step = cert.steps[0]
    assert (step.k, step.a, step.t) == (1, 0, 1)
    assert step.orders == (0, 4)
    assert (step.p_threshold, step.q_threshold) == (-1, 3)
    assert [s.degree for s in cert.steps] == [1, 2, 1]


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_maxrank_certificate(r):
    cert = maxrank_m2_certificate(r)
    n = r + 1
    assert cert.g == n * (n + 1) // 2
    assert cert.d == cert.g - 1
    assert len(cert.steps) == cert.g
    pairs = set(combinations_with_replacement(range(1, n + 1), 2))
    assert set(cert.eliminated()) == pairs
    assert all(check.holds for check in cert.checks)
    for step in cert.steps:
        assert step.orders == (2 * step.k - 2, 2 * cert.d - 2 * step.k + 2)
        for pair, order in step.rejected:
            assert order < step.q_threshold
    # later steps see fewer remaining pairs
    assert [len(s.rejected) for s in cert.steps] == list(range(cert.g - 1, -1, -1))
    # the case table agrees with the summed section orders on every rejection
    assert cert.divergences == ()
    assert len(cert.table_checks) == sum(len(s.rejected) for s in cert.steps)
    assert all(check.holds for check in cert.table_checks)


def test_product_q_order_cases():
    # r = 1, d = 2: at k = 1 (a = 0, t = 1) the pairs s_1s_2 and s_2s_2 remain
    assert product_q_order(1, 1, 1, 2) == 2
    assert product_q_order(1, 1, 2, 2) == 0
    # the survivor and eliminated pairs are not covered
    assert product_q_order(1, 1, 1, 1) is None
    assert product_q_order(1, 2, 1, 1) is None
    # r = 2, d = 5, k = 4 (a = 2, t = 1): s_2s_3 uses the a + t case
    assert product_q_order(2, 4, 2, 3) == 10 - 8 + 2 - 5 + 3

    for r in range(1, 7):
        n = r + 1
        d = n * (n + 1) // 2 - 1
        for k in range(1, d + 2):
            for i, j in combinations_with_replacement(range(1, n + 1), 2):
                table = product_q_order(r, k, i, j)
                if table is not None:
                    summed = section_orders(r, k, i)[1] + section_orders(r, k, j)[1]
                    assert table == summed


def test_maxrank_reports_table_divergence(monkeypatch, caplog):
    module = bnchain.certify._maxrank
    monkeypatch.setattr(module, "product_q_order", lambda r, k, i, j: -1)
    with caplog.at_level(logging.WARNING):
        cert = maxrank_m2_certificate(1)
    # the verdict does not depend on the table
    assert cert.eliminated() == [(1, 1), (1, 2), (2, 2)]
    assert cert.table_checks == ()
    assert cert.divergences[0] == (1, (1, 2), 2, -1)
    assert len(cert.divergences) == 3
    assert "case table" in caplog.text


def test_maxrank_scope():
    scope = maxrank_scope(BnParams(10, 3, 9))
    assert (scope.kind, scope.r) == (EXACT_SQUARE, 3)
    scope = maxrank_scope(BnParams(11, 3, 10))
    assert scope.kind == GENERIC_TAIL
    scope = maxrank_scope(BnParams(14, 3, 12))
    assert scope.kind == EMBEDDED_SQUARE

    with raises(OutOfRangeError):
        maxrank_scope(BnParams(9, 3, 9))  # not canonical
    with raises(OutOfRangeError):
        maxrank_scope(BnParams(16, 3, 15))  # e = 0
    with raises(OutOfRangeError):
        maxrank_scope(BnParams(9, 3, 8))  # e = 7 > 6
    with raises(TypeError):
        maxrank_scope((10, 3, 9))


if __name__ == "__main__":
    test_corner_filling()
    test_section_orders_match_series()
    test_maxrank_r1()
    test_product_q_order_cases()
    test_maxrank_scope()
