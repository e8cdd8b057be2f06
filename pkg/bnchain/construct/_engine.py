import logging

import numpy as np

from ..errors import ImpossibleFillingError
from ..tableau import Filling
from ._layout import SpotLayout


logger = logging.getLogger(__name__)


def _addable(shape, alpha):
    # Young shape as row lengths; 0-based (row, col) of the addable boxes
    return [
        (i, length)
        for i, length in enumerate(shape)
        if length < alpha and (i == 0 or shape[i - 1] > length)
    ]


def fill_layout(layout):
    """Fill the rectangle of a SpotLayout with the indices 1..alpha*beta-e.

    Indices are placed in increasing order. The next index goes to the
    first addable unreserved box in row-major order; when no unreserved
    box is addable it is doubled, taking an addable top-right reserved box
    (smallest column first) and an addable bottom-left reserved box
    (smallest row first). If this greedy order gets stuck, the other
    choices are searched depth-first, skipping shapes already known to
    be dead ends.
    """
    if not isinstance(layout, SpotLayout):
        raise TypeError(f"Expected SpotLayout, got {type(layout).__name__}.")
    alpha, beta, e = layout.alpha, layout.beta, layout.e
    g = alpha * beta - e
    bottom = {(r - 1, c - 1) for r, c in layout.bottom_cells()}
    top = {(r - 1, c - 1) for r, c in layout.top_cells()}
    full = (alpha,) * beta
    dead = set()
    backtracks = 0

    def options(shape):
        corners = _addable(shape, alpha)
        free = [cell for cell in corners if cell not in bottom and cell not in top]
        for cell in sorted(free):
            yield (cell,)
        tops = sorted(
            (cell for cell in corners if cell in top), key=lambda x: (x[1], x[0])
        )
        bottoms = sorted(cell for cell in corners if cell in bottom)
        for c1 in tops:
            for c2 in bottoms:
                yield (c1, c2)

    def grow(shape, cells):
        shape = list(shape)
        for row, _ in cells:
            shape[row] += 1
        return tuple(shape)

    def search(shape):
        nonlocal backtracks
        if shape == full:
            return []
        if shape in dead:
            return None
        for cells in options(shape):
            rest = search(grow(shape, cells))
            if rest is not None:
                return [cells] + rest
            backtracks += 1
        dead.add(shape)
        return None

    path = search((0,) * beta)
    if path is None:
        raise ImpossibleFillingError(
            f"No filling of the {alpha}x{beta} rectangle respects the layout {layout}."
        )
    if backtracks:
        logger.debug(
            "Layout %dx%d e=%d needed %d backtracks", alpha, beta, e, backtracks
        )

    grid = np.zeros((beta, alpha), np.int64)
    for index, cells in enumerate(path, 1):
        for r, c in cells:
            grid[r, c] = index
    return Filling(grid, g)
