import enum
from dataclasses import dataclass

from ..core import BnParams
from ..errors import CertificateError
from ..utils import check_int
from ._inequality import require


class InclusionStatus(enum.Enum):
    KNOWN = "known_inclusion"
    OPEN = "open_candidate"
    EXCLUDED = "excluded_by_cited_work"


# (family, alpha1) pairs whose inclusion is established
_KNOWN = {("t0", 2), ("t1", 3)}


@dataclass(frozen=True)
class InclusionCandidate:
    """A pair of loci of codimension 2 and 1 in the same genus for which a
    chain argument does not rule out the inclusion of the first in the second.

    Attributes:
        family (str): "t0" or "t1".
        alpha1 (int): The number of columns of the codimension 2 rectangle.
        loci (tuple): ((g, r1, d1), (g, r2, d2)) as derived.
        canonical (tuple): The same loci in the orientation alpha <= beta.
        status (InclusionStatus): What is known about the inclusion.
        checks (tuple): The verified Inequality records.
    """

    family: str
    alpha1: int
    loci: tuple
    canonical: tuple
    status: InclusionStatus
    checks: tuple


def _candidate(t, alpha1):
    family = f"t{t}"
    alpha2 = alpha1 + 1
    beta1 = 2 * alpha1 + 1 - t * (alpha1 + 1)
    quotient, rest = divmod(alpha1 * beta1 - 1, alpha2)
    if rest:
        raise CertificateError("divisibility", family=family, alpha1=alpha1)
    beta2 = quotient
    g = alpha1 * beta1 - 2
    r1, r2 = alpha1 - 1, alpha2 - 1
    d1, d2 = g - beta1 + r1, g - beta2 + r2

    checks = []
    step = "diophantine"
    require(
        checks, step, "a1*b1 vs a2*b2 + 1", alpha1 * beta1, "==", alpha2 * beta2 + 1
    )
    require(checks, step, "a1+b1 vs a2+b2+1", alpha1 + beta1, "<=", alpha2 + beta2 + 1)
    require(checks, step, "a2 vs a1+1", alpha2, "==", alpha1 + 1)
    p1, p2 = BnParams(g, r1, d1), BnParams(g, r2, d2)
    require(checks, step, f"codimension of {p1.triple}", p1.e, "==", 2)
    require(checks, step, f"codimension of {p2.triple}", p2.e, "==", 1)

    if (family, alpha1) in _KNOWN:
        status = InclusionStatus.KNOWN
    elif alpha1 <= 3:
        status = InclusionStatus.EXCLUDED
    else:
        status = InclusionStatus.OPEN
    canonical = tuple(BnParams.normalized(*p.triple).triple for p in (p1, p2))
    return InclusionCandidate(
        family, alpha1, (p1.triple, p2.triple), canonical, status, tuple(checks)
    )


def inclusion_candidates(alpha_max):
    """List the candidate inclusions of a codimension 2 locus in a
    codimension 1 locus for alpha1 = 2..alpha_max.

    With alpha2 = alpha1 + 1 the conditions alpha1*beta1 = alpha2*beta2 + 1
    and alpha1 + beta1 <= alpha2 + beta2 + 1 leave the two families
    beta1 = 2*alpha1 + 1 - t*(alpha1 + 1) with t = 0 and t = 1; the
    second starts at alpha1 = 3.
    """
    alpha_max = check_int(alpha_max, "alpha_max", 2)
    candidates = []
    for alpha1 in range(2, alpha_max + 1):
        candidates.append(_candidate(0, alpha1))
        if alpha1 >= 3:
            candidates.append(_candidate(1, alpha1))
    return candidates
