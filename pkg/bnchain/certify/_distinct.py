import enum
import logging
from dataclasses import dataclass

from ..construct import optimal_separation_filling
from ..core import BnParams, max_distance_bound, rho, separation_limit, serre_dual
from ..errors import OutOfRangeError
from ..tableau import find_filling, minimal_torsion_chain


logger = logging.getLogger(__name__)


class Verdict(enum.Enum):
    DISTINCT = "distinct"
    SAME_PARAMETERS = "same_parameters"
    SERRE_DUAL_PAIR = "serre_dual_pair"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class HypothesisCheck:
    """Whether a locus satisfies the bound on e under which the distance
    argument applies.

    The verdict uses ``twice_bound``, twice the bound on e stated for the
    distinctness criterion. ``layout_bound`` is the largest e for which
    optimal separation is available; ``agrees`` is False when the two
    bounds differ.
    """

    triple: tuple
    case: str
    e: int
    twice_bound: int
    layout_bound: int
    holds: bool

    @property
    def agrees(self):
        return 2 * self.layout_bound == self.twice_bound


@dataclass(frozen=True)
class DistinctnessVerdict:
    """The outcome of comparing two loci of curves with a g^r_d.

    Attributes:
        verdict (Verdict): The classification.
        p1, p2 (BnParams): The compared parameters, as given.
        A1 (int): The maximal distance sum on the rectangle with the larger
            perimeter, or None.
        bound2 (int): The maximal distance sum on the other rectangle, or None.
        hypothesis_report (tuple): HypothesisCheck per locus.
        reason (str): Why the verdict was reached.
    """

    verdict: Verdict
    p1: BnParams
    p2: BnParams
    A1: int = None
    bound2: int = None
    hypothesis_report: tuple = ()
    reason: str = ""


def _canonical(p):
    return BnParams.normalized(*p.triple)


def _dual_or_none(p):
    try:
        return serre_dual(p)
    except OutOfRangeError:
        return None


def _hypothesis(p):
    q = _canonical(p)
    r, e = q.r, q.e
    if q.alpha < q.beta:
        case = "strict"
        twice = (r + 3) * r
    else:
        case = "square"
        twice = r * r - 2 * r - 1
    check = HypothesisCheck(
        triple=q.triple,
        case=case,
        e=e,
        twice_bound=twice,
        layout_bound=separation_limit(q.alpha, q.beta),
        holds=2 * e <= twice,
    )
    if not check.agrees:
        logger.warning(
            "Bound on e for %s (%s case) is %s, optimal separation allows %d",
            q.triple,
            case,
            f"{twice}/2",
            check.layout_bound,
        )
    return check


def distinctness_check(p1, p2):
    """Decide whether the loci of curves carrying a g^{r1}_{d1} and a
    g^{r2}_{d2} of the same genus are distinct.

    Equal and Serre dual parameters give the same locus. Otherwise both
    loci need negative rho. Two loci of the same codimension e are distinct
    when the maximal distance sum of e doubled indices in the rectangle
    with the larger perimeter exceeds the maximum in the other rectangle:
    the chain that supports the first filling then supports no filling of
    the second.
    """
    for p in (p1, p2):
        if not isinstance(p, BnParams):
            raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    if p1.g != p2.g:
        raise ValueError(f"Loci live in different genera: {p1.g} and {p2.g}.")

    if (p1.r, p1.d) == (p2.r, p2.d):
        return DistinctnessVerdict(
            Verdict.SAME_PARAMETERS, p1, p2, reason="(r, d) pairs are equal"
        )
    if p2 == _dual_or_none(p1) or _canonical(p1) == _canonical(p2):
        return DistinctnessVerdict(
            Verdict.SERRE_DUAL_PAIR, p1, p2, reason="the series are Serre dual"
        )
    for p in (p1, p2):
        if rho(p) >= 0:
            raise OutOfRangeError(f"Expected rho < 0, got rho = {rho(p)} for {p}.")
    if p1.e != p2.e:
        return DistinctnessVerdict(
            Verdict.INCONCLUSIVE,
            p1,
            p2,
            reason=f"codimensions differ ({p1.e} and {p2.e})",
        )

    report = (_hypothesis(p1), _hypothesis(p2))
    failing = [h for h in report if not h.holds]
    if failing:
        h = failing[0]
        return DistinctnessVerdict(
            Verdict.INCONCLUSIVE,
            p1,
            p2,
            hypothesis_report=report,
            reason=f"2e = {2 * h.e} exceeds {h.twice_bound} for {h.triple}",
        )

    q1, q2 = _canonical(p1), _canonical(p2)
    if q1.alpha + q1.beta == q2.alpha + q2.beta:
        return DistinctnessVerdict(
            Verdict.INCONCLUSIVE,
            p1,
            p2,
            hypothesis_report=report,
            reason="the rectangles have equal perimeter",
        )
    big, small = sorted((q1, q2), key=lambda q: q.alpha + q.beta, reverse=True)
    a1 = max_distance_bound(big.alpha, big.beta, big.e)
    bound2 = max_distance_bound(small.alpha, small.beta, small.e)
    if bound2 < a1:
        verdict, reason = Verdict.DISTINCT, f"{bound2} < {a1}"
    else:
        verdict, reason = Verdict.INCONCLUSIVE, f"{bound2} >= {a1}"
    logger.info("Loci %s and %s: %s (%s)", p1.triple, p2.triple, verdict.value, reason)
    return DistinctnessVerdict(verdict, p1, p2, a1, bound2, report, reason)


def confirm_distinct(p1, p2):
    """Check a Distinct verdict on an actual chain: the minimal chain of an
    optimal separation filling on the rectangle with the larger perimeter
    must admit no filling of the other rectangle.
    """
    q1, q2 = _canonical(p1), _canonical(p2)
    big, small = sorted((q1, q2), key=lambda q: q.alpha + q.beta, reverse=True)
    f = optimal_separation_filling(big.alpha, big.beta, big.e)
    chain = minimal_torsion_chain(f)
    other = find_filling(small.rectangle(), chain)
    if other is not None:
        logger.warning("Chain %r supports both %s and %s", chain, q1.triple, q2.triple)
    return other is None
