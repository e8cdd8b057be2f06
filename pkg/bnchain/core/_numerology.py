from dataclasses import dataclass
from math import isqrt

from ..errors import OutOfRangeError
from ..utils import check_int, triangular


@dataclass(frozen=True)
class TriangularDecomposition:
    """The decomposition e = k(k+1)/2 + j with 0 <= j <= k."""

    e: int
    k: int
    j: int


def kj_decompose(e):
    """Write e as k(k+1)/2 + j with k(k+1)/2 <= e < (k+1)(k+2)/2."""
    e = check_int(e, "e", 0)
    k = (isqrt(8 * e + 1) - 1) // 2
    return TriangularDecomposition(e, k, e - triangular(k))


def separation_limit(alpha, beta):
    """The largest e for which the optimal separation construction applies.

    That is (alpha+2)(alpha-1)/2 for a strict rectangle and
    floor((alpha^2-2)/2) for a square.
    """
    alpha = check_int(alpha, "alpha", 1)
    beta = check_int(beta, "beta", 1)
    if alpha > beta:
        raise OutOfRangeError(f"Expected alpha <= beta, got {alpha} > {beta}.")
    if alpha < beta:
        return (alpha + 2) * (alpha - 1) // 2
    return (alpha * alpha - 2) // 2


def check_separation_range(alpha, beta, e):
    """Raise OutOfRangeError unless 0 <= e <= separation_limit(alpha, beta)."""
    limit = separation_limit(alpha, beta)
    e = check_int(e, "e", 0)
    if e > max(limit, 0):
        if alpha < beta:
            bound = f"e <= (alpha+2)(alpha-1)/2 = {limit}"
        else:
            bound = f"e <= (alpha^2-2)/2, i.e. e <= {limit}"
        raise OutOfRangeError(
            f"e = {e} violates {bound} for a {alpha}x{beta} rectangle."
        )
    return e


def max_distance_bound(alpha, beta, e):
    """The maximal sum of grid distances between the two occurrences of
    e doubled indices in an admissible alpha x beta filling:
    e(alpha+beta-2) - 2((k^3-k)/3 + jk).
    """
    e = check_separation_range(alpha, beta, e)
    dec = kj_decompose(e)
    k, j = dec.k, dec.j
    return e * (alpha + beta - 2) - 2 * ((k ** 3 - k) // 3 + j * k)


@dataclass(frozen=True)
class RangeReport:
    """Which existence results cover e = alpha*beta - g.

    Attributes:
        staircase: alpha*beta/2 + 1 <= g <= alpha*beta.
        separation: 0 <= e <= separation_limit(alpha, beta).
        petri: 0 < e <= g - 2.
    """

    alpha: int
    beta: int
    g: int
    e: int
    staircase: bool
    separation: bool
    petri: bool

    @property
    def in_range(self):
        return self.staircase


def existence_ranges(alpha, beta, g):
    """Report the ranges of the existence constructions that contain
    e = alpha*beta - g.
    """
    alpha = check_int(alpha, "alpha", 1)
    beta = check_int(beta, "beta", 1)
    g = check_int(g, "g", 0)
    if alpha > beta:
        raise OutOfRangeError(f"Expected alpha <= beta, got {alpha} > {beta}.")
    e = alpha * beta - g
    return RangeReport(
        alpha=alpha,
        beta=beta,
        g=g,
        e=e,
        staircase=alpha * beta + 2 <= 2 * g <= 2 * alpha * beta,
        separation=0 <= e <= separation_limit(alpha, beta),
        petri=0 < e <= g - 2,
    )
