from dataclasses import dataclass

import numpy as np

from ..core import Rectangle
from ..errors import UnsupportedMultiplicityError
from ..utils import check_int, grid_distance, readonly_int_array


@dataclass(frozen=True)
class RepeatRecord:
    """An index that occurs in more than one box of a filling.

    Attributes:
        index (int): The repeated index.
        occurrences (tuple): The (row, col) cells, sorted by row.
        pair_distances (tuple): Grid distances between consecutive occurrences.
    """

    index: int
    occurrences: tuple
    pair_distances: tuple


class Filling:
    """A positive filling of a rectangle with indices from 1..g.

    Row 1 is the top row and column 1 the leftmost column. Column c holds
    the vanishing data of section slot j = c-1. The filling is immutable;
    whether it is admissible is decided by ``validate_positive()``.

    Parameters:
        cells (array-like): A beta x alpha nested sequence of ints; cells[0]
            is the top row.
        g (int): The size of the index universe.
    """

    def __init__(self, cells, g):
        self._cells = readonly_int_array(cells, 2)
        if self._cells.shape[0] < 1 or self._cells.shape[1] < 1:
            raise ValueError(
                f"A filling needs at least one box, got {self._cells.shape}."
            )
        self._g = check_int(g, "g", 0)

    def __repr__(self):
        return f"<Filling {self.alpha}x{self.beta} g={self._g}>"

    def __eq__(self, other):
        if not isinstance(other, Filling):
            return NotImplemented
        return self._g == other._g and np.array_equal(self._cells, other._cells)

    def __hash__(self):
        return hash((self._g, self._cells.shape, self._cells.tobytes()))

    @property
    def cells(self):
        """The read-only beta x alpha array of indices."""
        return self._cells

    @property
    def alpha(self):
        """The number of columns."""
        return self._cells.shape[1]

    @property
    def beta(self):
        """The number of rows."""
        return self._cells.shape[0]

    @property
    def g(self):
        """The size of the index universe."""
        return self._g

    @property
    def shape(self):
        return Rectangle(self.alpha, self.beta, self._g)

    def index_at(self, row, col):
        """The index in box (row, col), both 1-based."""
        if not (1 <= row <= self.beta and 1 <= col <= self.alpha):
            raise IndexError(
                f"Box ({row}, {col}) is outside the {self.alpha}x{self.beta} rectangle."
            )
        return int(self._cells[row - 1, col - 1])

    def rows(self):
        """The filling as a tuple of row tuples."""
        return tuple(tuple(int(x) for x in row) for row in self._cells)

    def boxes(self):
        """Iterate over ((row, col), index) in row-major order."""
        for r in range(self.beta):
            for c in range(self.alpha):
                yield (r + 1, c + 1), int(self._cells[r, c])

    def occurrences(self):
        """Map each index to its cells, sorted by row (then column)."""
        occ = {}
        for cell, index in self.boxes():
            occ.setdefault(index, []).append(cell)
        return {index: sorted(cells) for index, cells in sorted(occ.items())}

    def distinct_indices(self):
        """The sorted list of indices that occur in the filling."""
        return sorted(set(int(x) for x in self._cells.flat))

    def repeats(self):
        """The RepeatRecord of every index that occurs more than once."""
        records = []
        for index, cells in self.occurrences().items():
            if len(cells) > 1:
                distances = tuple(
                    grid_distance(c1, c2) for c1, c2 in zip(cells[:-1], cells[1:])
                )
                records.append(RepeatRecord(index, tuple(cells), distances))
        return records


def transpose(f):
    """The Serre dual filling: box (i, j) goes to box (j, i)."""
    if not isinstance(f, Filling):
        raise TypeError(f"Expected Filling, got {type(f).__name__}.")
    return Filling(f.cells.T, f.g)


def grid_distance_sum(f):
    """The sum of the grid distances between the two occurrences of each
    doubled index.
    """
    if not isinstance(f, Filling):
        raise TypeError(f"Expected Filling, got {type(f).__name__}.")
    total = 0
    for record in f.repeats():
        if len(record.occurrences) > 2:
            raise UnsupportedMultiplicityError(
                f"Index {record.index} occurs {len(record.occurrences)} times; "
                "distance sums are only defined for doubled indices."
            )
        total += record.pair_distances[0]
    return total
