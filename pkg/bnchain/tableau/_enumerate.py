"""Brute-force searches over admissible fillings.

These are the exhaustive oracles that the constructions and certificates
are tested against, so they only rely on the definition of admissibility.
"""

import logging
from functools import lru_cache
from itertools import combinations

import numpy as np

from ..errors import BudgetExceededError
from ..utils import check_int, grid_distance
from ._chain import ChainSpec
from ._filling import Filling


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 30


def _shape_of(p):
    try:
        return check_int(p.alpha, "alpha", 1), check_int(p.beta, "beta", 1), p.g
    except AttributeError:
        raise TypeError(f"Expected BnParams or Rectangle, got {type(p).__name__}.")


def enumerate_fillings(p, chain, *, budget=DEFAULT_BUDGET):
    """Yield every admissible filling of the rectangle of p on the chain.

    The search is depth-first over the boxes in row-major order with
    candidate indices in increasing order, so fillings come out in
    lexicographic order of their row-major cell sequence.

    Parameters:
        p (BnParams or Rectangle): Supplies alpha, beta and g.
        chain (ChainSpec): The decorated chain, with chain.g == p.g.
        budget (int): The maximal number of boxes to search over.
    """
    alpha, beta, g = _shape_of(p)
    if not isinstance(chain, ChainSpec):
        raise TypeError(f"Expected ChainSpec, got {type(chain).__name__}.")
    if chain.g != g:
        raise ValueError(f"Chain has {chain.g} components, expected {g}.")
    if alpha * beta > budget:
        raise BudgetExceededError(alpha * beta, budget)
    return _enumerate(alpha, beta, g, chain)


def _enumerate(alpha, beta, g, chain):
    grid = np.zeros((beta, alpha), np.int64)
    last_seen = {}  # index -> list of cells, most recent last
    ncells = alpha * beta
    count = 0

    def visit(pos):
        nonlocal count
        if pos == ncells:
            count += 1
            yield Filling(grid, g)
            return
        r, c = divmod(pos, alpha)
        lo = 1 + max(grid[r, c - 1] if c else 0, grid[r - 1, c] if r else 0)
        hi = g - (alpha - 1 - c) - (beta - 1 - r)
        for v in range(int(lo), hi + 1):
            seen = last_seen.get(v)
            if seen:
                order = chain.torsion(v)
                if order is None or grid_distance(seen[-1], (r, c)) % order:
                    continue
            last_seen.setdefault(v, []).append((r, c))
            grid[r, c] = v
            yield from visit(pos + 1)
            grid[r, c] = 0
            last_seen[v].pop()
            if not last_seen[v]:
                del last_seen[v]

    yield from visit(0)
    logger.debug("Enumerated %d fillings of %dx%d with g=%d", count, alpha, beta, g)


def _addable(shape, alpha):
    """The boxes (row, col), 0-based, that can be added to a Young shape."""
    corners = []
    for i, length in enumerate(shape):
        if length < alpha and (i == 0 or shape[i - 1] > length):
            corners.append((i, length))
    return corners


def _grow(shape, cells):
    shape = list(shape)
    for i, _ in cells:
        shape[i] += 1
    return tuple(shape)


def max_distance_oracle(alpha, beta, e):
    """The exhaustive maximum of the grid distance sum over all admissible
    fillings of an alpha x beta rectangle with exactly e doubled indices
    (and all other indices single). Returns None if no such filling exists.

    A filling is built index by index; each index adds one addable box,
    or two for a doubled index. The search runs over the reachable
    shapes, which makes it exact without listing fillings one by one.
    """
    alpha = check_int(alpha, "alpha", 1)
    beta = check_int(beta, "beta", 1)
    e = check_int(e, "e", 0)
    full = (alpha,) * beta

    @lru_cache(maxsize=None)
    def best(shape, pairs):
        if shape == full:
            return 0 if pairs == 0 else None
        corners = _addable(shape, alpha)
        result = None
        for cell in corners:
            sub = best(_grow(shape, [cell]), pairs)
            if sub is not None and (result is None or sub > result):
                result = sub
        if pairs:
            for c1, c2 in combinations(corners, 2):
                sub = best(_grow(shape, [c1, c2]), pairs - 1)
                if sub is not None:
                    sub += grid_distance(c1, c2)
                    if result is None or sub > result:
                        result = sub
        return result

    value = best((0,) * beta, e)
    logger.debug(
        "Distance oracle %dx%d e=%d: %s (%d states)",
        alpha,
        beta,
        e,
        value,
        best.cache_info().currsize,
    )
    return value


def find_filling(p, chain):
    """Find an admissible filling of the rectangle of p on the chain, or
    return None if the chain supports none.

    Unlike enumerate_fillings this does not list fillings, so it is also
    practical to show that none exist.
    """
    alpha, beta, g = _shape_of(p)
    if not isinstance(chain, ChainSpec):
        raise TypeError(f"Expected ChainSpec, got {type(chain).__name__}.")
    if chain.g != g:
        raise ValueError(f"Chain has {chain.g} components, expected {g}.")
    full = (alpha,) * beta
    dead = set()

    def options(shape, index):
        corners = _addable(shape, alpha)
        for cell in corners:
            yield (cell,)
        order = chain.torsion(index)
        if order is None:
            return
        for n in range(2, len(corners) + 1):
            for cells in combinations(corners, n):
                # corners are sorted by row, so consecutive pairs are adjacent
                if all(
                    grid_distance(c1, c2) % order == 0
                    for c1, c2 in zip(cells[:-1], cells[1:])
                ):
                    yield cells

    def search(shape, index):
        if shape == full:
            return []
        if index > g or (shape, index) in dead:
            return None
        remaining = alpha * beta - sum(shape)
        if remaining > 0:
            for cells in options(shape, index):
                rest = search(_grow(shape, cells), index + 1)
                if rest is not None:
                    return [(index, cells)] + rest
        rest = search(shape, index + 1)
        if rest is not None:
            return rest
        dead.add((shape, index))
        return None

    path = search((0,) * beta, 1)
    logger.debug(
        "Support search %dx%d on %r: %d dead states", alpha, beta, chain, len(dead)
    )
    if path is None:
        return None
    grid = np.zeros((beta, alpha), np.int64)
    for index, cells in path:
        for r, c in cells:
            grid[r, c] = index
    return Filling(grid, g)


def chain_supports_filling(p, chain):
    """Whether the chain admits an admissible filling of the rectangle of p."""
    return find_filling(p, chain) is not None
