import numpy as np

from ..errors import OutOfRangeError


def triangular(n):
    """The n-th triangular number n(n+1)/2."""
    return n * (n + 1) // 2


def grid_distance(cell1, cell2):
    """The grid distance |drow| + |dcol| between two (row, col) cells."""
    return abs(cell1[0] - cell2[0]) + abs(cell1[1] - cell2[1])


def readonly_int_array(data, ndim):
    """Get a read-only int64 copy of the given array-like, checking its rank."""
    arr = np.array(data, dtype=np.int64, copy=True)
    if arr.ndim != ndim:
        raise ValueError(f"Expected {ndim}D integer data, got shape {arr.shape}.")
    arr.flags.writeable = False
    return arr


def check_int(value, name, minimum=None):
    """Check that value is an int (not a bool), optionally bounded below."""
    if isinstance(value, (bool, np.bool_)) or not isinstance(
        value, (int, np.integer)
    ):
        raise TypeError(f"{name} must be an int, not {type(value).__name__}.")
    value = int(value)
    if minimum is not None and value < minimum:
        raise OutOfRangeError(f"{name} must be at least {minimum}, got {value}.")
    return value
