import numpy as np

from ..errors import MalformedInputError
from ..utils import check_int, grid_distance
from ._chain import ChainSpec
from ._filling import Filling
from ._report import ValidationReport, Violation


class WeightedFilling:
    """A filling of a vertical strip in which each box holds a list of
    signed entries (index, weight) with weight +1 or -1.

    The rectangle occupies rows 1..beta; boxes above (row < 1) and below
    (row > beta) may also carry entries. The i-weight of a box is its
    0-weight (1 above the rectangle, 0 elsewhere) plus the weights of
    its entries with index <= i.

    Parameters:
        alpha (int): The number of columns.
        beta (int): The number of rows of the rectangle (may be 0).
        g (int): The size of the index universe.
        entries (dict): Map from (row, col) to a sequence of (index, weight).
    """

    def __init__(self, alpha, beta, g, entries=None):
        self._alpha = check_int(alpha, "alpha", 1)
        self._beta = check_int(beta, "beta", 0)
        self._g = check_int(g, "g", 0)
        store = {}
        for key, items in dict(entries or {}).items():
            try:
                row, col = key
            except (TypeError, ValueError):
                raise MalformedInputError(f"Box key must be (row, col), got {key!r}.")
            row, col = check_int(row, "row"), check_int(col, "col")
            if not 1 <= col <= self._alpha:
                raise MalformedInputError(f"Column {col} is not in 1..{self._alpha}.")
            box = []
            for item in items:
                try:
                    index, weight = item
                except (TypeError, ValueError):
                    raise MalformedInputError(
                        f"An entry must be (index, weight), got {item!r}."
                    )
                index, weight = check_int(index, "index"), check_int(weight, "weight")
                if not 1 <= index <= self._g:
                    raise MalformedInputError(f"Index {index} is not in 1..{self._g}.")
                if weight not in (1, -1):
                    raise MalformedInputError(f"Weight must be +1 or -1, got {weight}.")
                box.append((index, weight))
            if box:
                store[(row, col)] = tuple(sorted(box, key=lambda x: x[0]))
        self._entries = dict(sorted(store.items()))

    @classmethod
    def from_filling(cls, f):
        """Embed a positive filling, every index with weight +1."""
        entries = {cell: [(index, 1)] for cell, index in f.boxes()}
        return cls(f.alpha, f.beta, f.g, entries)

    def __repr__(self):
        return f"<WeightedFilling {self._alpha}x{self._beta} g={self._g} boxes={len(self._entries)}>"

    def __eq__(self, other):
        if not isinstance(other, WeightedFilling):
            return NotImplemented
        return (self._alpha, self._beta, self._g, self._entries) == (
            other._alpha,
            other._beta,
            other._g,
            other._entries,
        )

    @property
    def alpha(self):
        return self._alpha

    @property
    def beta(self):
        return self._beta

    @property
    def g(self):
        return self._g

    @property
    def entries(self):
        """A copy of the map from (row, col) to the sorted entry tuple."""
        return dict(self._entries)

    def row_span(self):
        """The rows to inspect: all entry rows and the rectangle, padded by one."""
        rows = [row for row, _ in self._entries] + [1, self._beta]
        return range(min(rows) - 1, max(rows) + 2)

    def weight(self, row, col, i):
        """The i-weight of box (row, col)."""
        base = 1 if row < 1 else 0
        return base + sum(
            w for index, w in self._entries.get((row, col), ()) if index <= i
        )


def validate_weighted(w, chain):
    """Check the weight conditions of a weighted filling.

    For every box and every i in 0..g the i-weight must be 0 or 1 and
    weakly decrease to the right and downward. The g-weight is 1 in and
    above the rectangle and 0 below it. A number occurs at most once per
    box, and a number occurring with weight +1 in several boxes must sit
    on a special component with the torsion rule for grid distances.
    """
    if not isinstance(w, WeightedFilling):
        raise TypeError(f"Expected WeightedFilling, got {type(w).__name__}.")
    if not isinstance(chain, ChainSpec):
        raise TypeError(f"Expected ChainSpec, got {type(chain).__name__}.")

    violations = []
    if chain.g != w.g:
        violations.append(
            Violation(
                "chain-mismatch",
                f"The chain has {chain.g} components but the filling uses 1..{w.g}.",
            )
        )

    # (b) no number twice in a box
    for cell, items in w.entries.items():
        indices = [index for index, _ in items]
        if len(set(indices)) != len(indices):
            violations.append(
                Violation("box-duplicate", f"Box {cell} holds a number twice.", (cell,))
            )

    # (c), (d), (e): tabulate weights per i over the padded strip
    rows = w.row_span()
    table = np.zeros((w.g + 1, len(rows), w.alpha), np.int64)
    for ri, row in enumerate(rows):
        if row < 1:
            table[:, ri, :] = 1
    for (row, col), items in w.entries.items():
        for index, weight in items:
            table[index:, rows.index(row), col - 1] += weight

    reported = set()

    def report(kind, cell, message, cells):
        if (kind, cell) not in reported:
            reported.add((kind, cell))
            violations.append(Violation(kind, message, cells))

    for i in range(w.g + 1):
        layer = table[i]
        for ri, row in enumerate(rows):
            for c in range(w.alpha):
                cell = (row, c + 1)
                value = int(layer[ri, c])
                if value not in (0, 1):
                    report(
                        "weight-range",
                        cell,
                        f"The {i}-weight of box {cell} is {value}.",
                        (cell,),
                    )
                if c + 1 < w.alpha and value < layer[ri, c + 1]:
                    right = (row, c + 2)
                    report(
                        "weight-row",
                        cell,
                        f"The {i}-weight increases from box {cell} to box {right}.",
                        (cell, right),
                    )
                if ri + 1 < len(rows) and value < layer[ri + 1, c]:
                    below = (row + 1, c + 1)
                    report(
                        "weight-column",
                        cell,
                        f"The {i}-weight increases from box {cell} to box {below}.",
                        (cell, below),
                    )

    # (f) final weights
    final = table[w.g]
    for ri, row in enumerate(rows):
        expected = 1 if row <= w.beta else 0
        for c in range(w.alpha):
            if final[ri, c] != expected:
                cell = (row, c + 1)
                violations.append(
                    Violation(
                        "final-weight",
                        f"The g-weight of box {cell} is {int(final[ri, c])}, expected {expected}.",
                        (cell,),
                    )
                )

    # (a) positive repeats need torsion
    positive = {}
    for cell, items in w.entries.items():
        for index, weight in items:
            if weight > 0:
                positive.setdefault(index, []).append(cell)
    for index, cells in sorted(positive.items()):
        if len(cells) < 2:
            continue
        cells = sorted(cells)
        order = chain.torsion(index)
        if order is None:
            violations.append(
                Violation(
                    "generic-repeat",
                    f"Index {index} appears with weight +1 more than once on a generic component.",
                    tuple(cells),
                )
            )
            continue
        for c1, c2 in zip(cells[:-1], cells[1:]):
            dist = grid_distance(c1, c2)
            if dist % order:
                violations.append(
                    Violation(
                        "torsion-divisibility",
                        f"Torsion order {order} of component {index} does not divide "
                        f"the grid distance {dist}.",
                        (c1, c2),
                    )
                )

    return ValidationReport("weighted filling", violations)


def reduce_to_positive(w):
    """Keep, in each box of the rectangle, the last index with weight +1."""
    if not isinstance(w, WeightedFilling):
        raise TypeError(f"Expected WeightedFilling, got {type(w).__name__}.")
    if w.beta < 1:
        raise MalformedInputError(
            "Cannot reduce a weighted filling with an empty rectangle."
        )
    entries = w.entries
    cells = np.zeros((w.beta, w.alpha), np.int64)
    for row in range(1, w.beta + 1):
        for col in range(1, w.alpha + 1):
            positive = [
                index for index, weight in entries.get((row, col), ()) if weight > 0
            ]
            if not positive:
                raise MalformedInputError(
                    f"Box ({row}, {col}) has no entry with weight +1."
                )
            cells[row - 1, col - 1] = positive[-1]
    return Filling(cells, w.g)
