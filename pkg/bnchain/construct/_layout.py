import logging
from dataclasses import dataclass

from ..core import check_separation_range, kj_decompose, separation_limit
from ..errors import ImpossibleFillingError, OutOfRangeError
from ..utils import check_int, triangular


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpotLayout:
    """The boxes reserved for doubled indices.

    Column i keeps its bottom a_i boxes for the later occurrence of a
    doubled index and its top b_i boxes for the earlier one. ``a`` holds
    a_1..a_{alpha-1} and ``b`` holds b_2..b_alpha; a_alpha = b_1 = 0.

    Attributes:
        alpha, beta, e (int): The rectangle and the number of doubled indices.
        t (int): The diagonal depth; for separation layouts this is
            k - alpha + 1, which is zero or negative.
        l (int): The overflow into the first and last column.
        eps (tuple): The alpha-1 correction bits.
        a (tuple): Bottom-left reserved boxes of columns 1..alpha-1.
        b (tuple): Top-right reserved boxes of columns 2..alpha.
        source (str): "separation" or "staircase".
    """

    alpha: int
    beta: int
    e: int
    t: int
    l: int  # noqa: E741
    eps: tuple
    a: tuple
    b: tuple
    source: str

    def bottom(self, col):
        """The number of bottom-left reserved boxes in column col (1-based)."""
        return self.a[col - 1] if col < self.alpha else 0

    def top(self, col):
        """The number of top-right reserved boxes in column col (1-based)."""
        return self.b[col - 2] if col > 1 else 0

    def bottom_cells(self):
        """The bottom-left reserved boxes as (row, col), sorted."""
        return sorted(
            (row, col)
            for col in range(1, self.alpha + 1)
            for row in range(self.beta - self.bottom(col) + 1, self.beta + 1)
        )

    def top_cells(self):
        """The top-right reserved boxes as (row, col), sorted."""
        return sorted(
            (row, col)
            for col in range(1, self.alpha + 1)
            for row in range(1, self.top(col) + 1)
        )

    def problems(self):
        """List the violated layout invariants (empty when consistent)."""
        found = []
        a, b = list(self.a), list(self.b)
        if sum(a) != self.e or sum(b) != self.e:
            found.append(f"sums {sum(a)}, {sum(b)} differ from e = {self.e}")
        if any(x < 0 for x in a + b):
            found.append("negative reservation")
        if any(x < y for x, y in zip(a[:-1], a[1:])):
            found.append(f"a = {a} is not non-increasing")
        if any(x > y for x, y in zip(b[:-1], b[1:])):
            found.append(f"b = {b} is not non-decreasing")
        for col in range(2, self.alpha):
            if self.bottom(col) + self.top(col) > self.beta:
                found.append(f"column {col} is over-reserved")
        if self.alpha > 1:
            if self.bottom(1) > self.beta - 1:
                found.append(f"a_1 = {self.bottom(1)} exceeds beta-1")
            if self.top(self.alpha) > self.beta - 1:
                found.append(f"b_alpha = {self.top(self.alpha)} exceeds beta-1")
        return found


def _checked(layout):
    problems = layout.problems()
    if problems:
        raise RuntimeError(f"Inconsistent layout {layout}: {'; '.join(problems)}")
    return layout


def separation_layout(alpha, beta, e):
    """The reserved boxes of the optimal separation construction.

    All spots at deficiency < k are used (deficiency s meaning the box
    lies s steps away from its corner along the anti-diagonal), plus j
    spots at deficiency k taken in the columns that are furthest to the
    right. In a square with k = alpha-1 the extra spots alternate along
    the diagonal.
    """
    alpha = check_int(alpha, "alpha", 1)
    beta = check_int(beta, "beta", 1)
    e = check_separation_range(alpha, beta, e)
    dec = kj_decompose(e)
    k, j = dec.k, dec.j
    n = alpha - 1
    if k == 0:
        eps = [0] * n
        a = [0] * n
        b = [0] * n
    elif k < alpha - 1:
        eps = [1 if k - j + 1 < i <= k + 1 else 0 for i in range(1, alpha)]
        a = [max(0, k - i + 1) + eps[i - 1] for i in range(1, alpha)]
        b = [
            max(0, k - alpha + i) + (1 if i > alpha - j else 0)
            for i in range(2, alpha + 1)
        ]
    elif alpha < beta:
        eps = [1 if alpha - 1 - j < i else 0 for i in range(1, alpha)]
        a = [alpha - i + eps[i - 1] for i in range(1, alpha)]
        b = [i - 1 + eps[i - 2] for i in range(2, alpha + 1)]
    else:
        diagonal = {alpha - 2 * s for s in range(1, j + 1)}
        eps = [1 if i in diagonal else 0 for i in range(1, alpha)]
        a = [alpha - i + eps[i - 1] for i in range(1, alpha)]
        b = [i - 1 + eps[i - 2] for i in range(2, alpha + 1)]
    layout = SpotLayout(
        alpha, beta, e, k - alpha + 1, 0, tuple(eps), tuple(a), tuple(b), "separation"
    )
    return _checked(layout)


def staircase_layout(alpha, beta, g):
    """The reserved boxes of the staircase construction for indices 1..g.

    Requires alpha <= beta and alpha*beta/2 + 1 <= g <= alpha*beta. When
    e = alpha*beta - g is small enough for the optimal separation
    construction, that layout is returned instead.
    """
    alpha = check_int(alpha, "alpha", 1)
    beta = check_int(beta, "beta", 1)
    g = check_int(g, "g", 0)
    if alpha > beta:
        raise OutOfRangeError(f"Expected alpha <= beta, got {alpha} > {beta}.")
    if not alpha * beta + 2 <= 2 * g <= 2 * alpha * beta:
        raise OutOfRangeError(
            f"g = {g} is outside alpha*beta/2 + 1 <= g <= alpha*beta "
            f"for a {alpha}x{beta} rectangle."
        )
    e = alpha * beta - g
    if e <= separation_limit(alpha, beta):
        logger.debug("Staircase %dx%d e=%d delegates to separation", alpha, beta, e)
        return separation_layout(alpha, beta, e)
    if alpha == 1:
        raise ImpossibleFillingError("A single column cannot hold a doubled index.")

    n = alpha - 1
    t0 = (beta - alpha + 1) // 2
    base = triangular(alpha - 1)
    if e <= base + t0 * n:
        t = (e - base) // n
        j = e - base - t * n
        eps = [1 if alpha - j <= i else 0 for i in range(1, alpha)]
        l = 0  # noqa: E741
    else:
        t = t0
        rest = e - base - t0 * n
        if (beta - alpha) % 2:
            eps = [0] * n
        else:
            j = min(rest, (alpha - 1) // 2)
            diagonal = {alpha - 2 * s for s in range(1, j + 1)}
            eps = [1 if i in diagonal else 0 for i in range(1, alpha)]
        l = rest - sum(eps)  # noqa: E741
        if l < 0:
            raise ImpossibleFillingError(
                f"Staircase overflow l = {l} is negative for ({alpha}, {beta}, {g})."
            )

    a = [alpha - i + t + eps[i - 1] for i in range(1, alpha)]
    b = [i - 1 + t + eps[i - 2] for i in range(2, alpha + 1)]
    a[0] += l
    b[-1] += l
    layout = SpotLayout(
        alpha, beta, e, t, l, tuple(eps), tuple(a), tuple(b), "staircase"
    )
    return _checked(layout)
