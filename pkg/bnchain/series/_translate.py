"""Translation between admissible fillings and refined limit linear series.

Column c of a filling belongs to section slot j = c - 1. Index i in
column c means that the section in slot j reaches u + v = d on
component i; otherwise its orders at the two nodes of component i add
up to d - 1.
"""

import logging

import numpy as np

from ..core import BnParams, serre_dual
from ..errors import InconsistentTableError
from ..tableau import ChainSpec, Filling, transpose, validate_positive
from ._table import LimitSeriesTable, LineBundleDescriptor


logger = logging.getLogger(__name__)


def _check_inputs(f, p, chain):
    if not isinstance(f, Filling):
        raise TypeError(f"Expected Filling, got {type(f).__name__}.")
    if not isinstance(p, BnParams):
        raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    if not isinstance(chain, ChainSpec):
        raise TypeError(f"Expected ChainSpec, got {type(chain).__name__}.")
    if (f.alpha, f.beta, f.g) != (p.alpha, p.beta, p.g):
        raise ValueError(
            f"A {f.alpha}x{f.beta} filling with g={f.g} does not fit {p} "
            f"({p.alpha} columns, {p.beta} rows)."
        )
    report = validate_positive(f, chain)
    if not report:
        raise ValueError(
            f"The filling is not admissible: {report.violations[0].message}"
        )


def filling_to_series(f, p, chain):
    """Get the refined limit linear series of an admissible filling.

    The order of slot j at P_i is u = j + i - 1 minus the number of indices
    below i in column j+1. The order at Q_i is d - u[i+1][j] for i < g and
    r - j on the last component.
    """
    _check_inputs(f, p, chain)
    g, r, d = p.triple
    cells = f.cells

    u = np.zeros((g, r + 1), np.int64)
    for j in range(r + 1):
        column = cells[:, j]
        for i in range(1, g + 1):
            u[i - 1, j] = j + i - 1 - int((column < i).sum())
    v = np.zeros_like(u)
    v[:-1] = d - u[1:]
    v[-1] = r - np.arange(r + 1)

    occurrences = f.occurrences()
    bundles = []
    for i in range(1, g + 1):
        cols = sorted(c for _, c in occurrences.get(i, ()))
        if not cols:
            bundles.append(LineBundleDescriptor.generic(d))
            continue
        first = cols[0] - 1
        bundles.append(
            LineBundleDescriptor.special(int(u[i - 1, first]), int(v[i - 1, first]))
        )
        order = chain.torsion(i)
        for col in cols[1:]:
            gap = int(u[i - 1, col - 1] - u[i - 1, first])
            if order is None or gap % order:
                raise RuntimeError(
                    f"Index {i} occurs in columns {cols}, but the orders at P_{i} "
                    f"differ by {gap}, which torsion order {order} does not divide."
                )

    if not (u[1:] + v[:-1] == d).all():
        raise RuntimeError("The computed series is not refined.")
    table = LimitSeriesTable(p, chain, u, v, bundles)
    logger.debug("Series for %r on %r", p, chain)
    return table


def series_to_filling(table):
    """Recover the filling of a refined limit linear series.

    The indices 1..g are added in turn; index i goes to the first empty
    box of column j+1 whenever slot j has u + v = d on component i.
    """
    if not isinstance(table, LimitSeriesTable):
        raise TypeError(f"Expected LimitSeriesTable, got {type(table).__name__}.")
    p = table.p
    g, r, d = p.triple
    alpha, beta = p.alpha, p.beta
    grid = np.zeros((beta, alpha), np.int64)
    filled = [0] * alpha
    sums = table.u + table.v
    for i in range(1, g + 1):
        for j in range(r + 1):
            total = int(sums[i - 1, j])
            if total == d:
                if filled[j] == beta:
                    raise InconsistentTableError(
                        f"Column {j + 1} overflows at component {i}: "
                        f"all {beta} boxes are already filled."
                    )
                grid[filled[j], j] = i
                filled[j] += 1
            elif total != d - 1:
                raise InconsistentTableError(
                    f"u + v = {total} on component {i}, slot {j}; expected {d - 1} or {d}."
                )
    for j, count in enumerate(filled):
        if count != beta:
            raise InconsistentTableError(
                f"Column {j + 1} received {count} indices, expected {beta}."
            )
    return Filling(grid, g)


def dual_series(f, p, chain):
    """The limit series of the transposed filling, which is the Serre dual
    series on the same chain.
    """
    _check_inputs(f, p, chain)
    return filling_to_series(transpose(f), serre_dual(p), chain)
