"""Maximal rank for m = 2 on the square component.

For r >= 1 let g = (r+1)(r+2)/2 and d = g-1, so the rectangle is an
(r+1) x (r+1) square with e = r(r+1)/2. On the chain given by the
triangular corner filling, the degree of L^2 is distributed as 1 on the
first and last component and 2 on all the others. Walking k = 1..g, the
vanishing thresholds on component k leave exactly one product s_t s_{a+1}
(where k = a(a+1)/2 + t) whose coefficient is forced to vanish, which
shows that the symmetric square map is injective.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from ..core import BnParams
from ..errors import CertificateError, OutOfRangeError
from ..series import filling_to_series
from ..tableau import Filling, minimal_torsion_chain
from ..utils import check_int, triangular
from ._inequality import Inequality, require


logger = logging.getLogger(__name__)


EXACT_SQUARE = "exact_square"
GENERIC_TAIL = "generic_tail"
EMBEDDED_SQUARE = "embedded_square"


def _corner(k):
    # k = a(a+1)/2 + t with 1 <= t <= a+1
    a = 0
    while triangular(a + 1) < k:
        a += 1
    return a, k - triangular(a)


def corner_filling(r):
    """The (r+1) x (r+1) filling with index a(a+1)/2 + t in the boxes
    (row t, col a+1) and (row a+1, col t).
    """
    r = check_int(r, "r", 1)
    n = r + 1
    g = triangular(n)
    grid = np.zeros((n, n), np.int64)
    for k in range(1, g + 1):
        a, t = _corner(k)
        grid[t - 1, a] = k
        grid[a, t - 1] = k
    return Filling(grid, g)


def section_orders(r, k, i):
    """The vanishing orders of s_i at P_k and Q_k on the corner filling."""
    g = triangular(r + 1)
    d = g - 1
    a, t = _corner(k)
    if i < t:
        below, upto = a + 1, a + 1
    elif i <= a:
        below, upto = a, a + (1 if i == t else 0)
    elif i == a + 1:
        below, upto = t - 1, t
    else:
        below, upto = 0, 0
    return i - 2 + k - below, d - i + 1 - k + upto


def product_q_order(r, k, i, j):
    """The order at Q_k of s_i s_j (i <= j) read off the case table for
    pairs still in play at component k. Returns None for pairs the table
    does not cover (the survivor and pairs eliminated earlier).
    """
    d = triangular(r + 1) - 1
    a, t = _corner(k)
    if i <= t and j > a + 1:
        extra = a + 1
    elif t < i <= a and j == a + 1:
        extra = a + t
    elif t < i <= a and j > a + 1:
        extra = a
    elif i == j == a + 1 and t < a + 1:
        extra = 2 * t
    elif i == a + 1 and j > a + 1:
        extra = t
    elif i > a + 1 and j > a + 1:
        extra = 0
    else:
        return None
    return 2 * d - 2 * k + 2 - i - j + extra


@dataclass(frozen=True)
class MaxRankStep:
    """The elimination on component k.

    Attributes:
        k, a, t (int): The component, with k = a(a+1)/2 + t.
        degree (int): The degree of L^2 assigned to component k.
        p_threshold, q_threshold (int): The vanishing a surviving product
            must reach at P_k and Q_k.
        pair (tuple): The eliminated pair (t, a+1).
        orders (tuple): The orders of s_t s_{a+1} at P_k and Q_k.
        rejected (tuple): ((i, j), order at Q_k) for every other pair not
            yet eliminated.
    """

    k: int
    a: int
    t: int
    degree: int
    p_threshold: int
    q_threshold: int
    pair: tuple
    orders: tuple
    rejected: tuple


@dataclass(frozen=True)
class MaxRankCertificate:
    """Certificate that S^2 H^0(L) -> H^0(L^2) is injective for the square
    case of dimension r.

    The verdict rests on the orders summed from the sections. Each
    rejected order is also compared with the case table of
    ``product_q_order()``: agreements go to ``table_checks``, and
    disagreements to ``divergences`` as (k, pair, summed, table).
    """

    r: int
    g: int
    d: int
    filling: Filling
    steps: tuple
    checks: tuple
    scope: str = EXACT_SQUARE
    table_checks: tuple = ()
    divergences: tuple = ()

    def eliminated(self):
        """The eliminated pairs in order."""
        return [step.pair for step in self.steps]


def maxrank_m2_certificate(r):
    """Build and verify the maximal rank certificate for m = 2 in the
    square case g = (r+1)(r+2)/2, d = g-1.
    """
    r = check_int(r, "r", 1)
    n = r + 1
    g = triangular(n)
    d = g - 1
    p = BnParams(g, r, d)
    f = corner_filling(r)
    series = filling_to_series(f, p, minimal_torsion_chain(f))
    checks = []
    table_checks = []
    divergences = []

    orders = {}
    for k in range(1, g + 1):
        u, v = series.vanishing(k)
        for i in range(1, n + 1):
            computed = section_orders(r, k, i)
            if computed != (u[i - 1], v[i - 1]):
                raise CertificateError(
                    "section-orders",
                    k=k,
                    section=i,
                    formula=computed,
                    series=(u[i - 1], v[i - 1]),
                )
            orders[k, i] = computed

    degrees = [1] + [2] * (g - 2) + [1]
    require(checks, "degree-sum", "total degree of L^2", sum(degrees), "==", 2 * d)

    pairs = list(combinations_with_replacement(range(1, n + 1), 2))
    remaining = set(pairs)
    steps = []
    for k in range(1, g + 1):
        a, t = _corner(k)
        p_min, q_min = 2 * k - 3, 2 * d - 2 * k + 1

        def product(pair):
            (p1, q1), (p2, q2) = orders[k, pair[0]], orders[k, pair[1]]
            return p1 + p2, q1 + q2

        pair = (t, a + 1)
        if pair not in remaining:
            raise CertificateError("survivor", k=k, pair=pair, reason="eliminated")
        at_p, at_q = product(pair)
        name = f"s_{t}s_{a + 1}"
        require(checks, "survivor", f"ord_P{k} {name}", at_p, "==", 2 * k - 2, k=k)
        top = 2 * d - 2 * k + 2
        require(checks, "survivor", f"ord_Q{k} {name}", at_q, "==", top, k=k)
        require(checks, "threshold", f"ord_P{k} {name}", at_p, ">=", p_min, k=k)
        require(checks, "threshold", f"ord_Q{k} {name}", at_q, ">=", q_min, k=k)

        rejected = []
        for other in sorted(remaining - {pair}):
            q_order = product(other)[1]
            label = f"ord_Q{k} s_{other[0]}s_{other[1]}"
            require(checks, "rejection", label, q_order, "<", q_min, k=k, pair=other)
            rejected.append((other, q_order))

            table = product_q_order(r, k, *other)
            if table == q_order:
                check = Inequality(f"{label} by cases", int(q_order), "==", table)
                table_checks.append(check)
            else:
                logger.warning(
                    "At k=%d the case table gives %s for %s, the sections give %d",
                    k,
                    table,
                    other,
                    q_order,
                )
                divergences.append((k, other, int(q_order), table))

        # independent recount over every pair
        survivors = [
            x for x in pairs if product(x)[0] >= p_min and product(x)[1] >= q_min
        ]
        label = f"pairs passing both thresholds at {k}"
        count = len(survivors)
        require(checks, "uniqueness", label, count, "==", 1, k=k, found=survivors)
        if survivors[0] != pair:
            raise CertificateError("uniqueness", k=k, found=survivors[0], pair=pair)

        remaining.remove(pair)
        steps.append(
            MaxRankStep(
                k=k,
                a=a,
                t=t,
                degree=degrees[k - 1],
                p_threshold=p_min,
                q_threshold=q_min,
                pair=pair,
                orders=(at_p, at_q),
                rejected=tuple(rejected),
            )
        )

    eliminated = [step.pair for step in steps]
    covered = len(set(eliminated))
    require(checks, "coverage", "eliminated pairs", covered, "==", len(pairs))
    require(checks, "coverage", "remaining pairs", len(remaining), "==", 0)
    logger.info("Max rank certificate for r=%d: %d eliminations", r, len(steps))
    return MaxRankCertificate(
        r,
        g,
        d,
        f,
        tuple(steps),
        tuple(checks),
        table_checks=tuple(table_checks),
        divergences=tuple(divergences),
    )


@dataclass(frozen=True)
class MaxRankScope:
    """How parameters relate to the square case certified above.

    Attributes:
        p (BnParams): The parameters in the orientation alpha <= beta.
        kind (str): "exact_square", "generic_tail" (a square with fewer
            doubled indices, completed by generic components) or
            "embedded_square" (the square sits inside a taller rectangle).
        r (int): The dimension of the square certificate that applies.
    """

    p: BnParams
    kind: str
    r: int


def maxrank_scope(p):
    """Classify parameters with r+1 <= g-d+r and 0 < e <= r(r+1)/2 by how
    the square certificate covers them.
    """
    if not isinstance(p, BnParams):
        raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    if not p.is_canonical:
        raise OutOfRangeError(
            f"Expected r+1 <= g-d+r, got {p.alpha} > {p.beta} for {p}."
        )
    top = triangular(p.r)
    if not 0 < p.e <= top:
        raise OutOfRangeError(f"Expected 0 < e <= r(r+1)/2 = {top}, got e = {p.e}.")
    if p.alpha < p.beta:
        kind = EMBEDDED_SQUARE
    elif p.e == top:
        kind = EXACT_SQUARE
    else:
        kind = GENERIC_TAIL
    return MaxRankScope(p, kind, p.r)
