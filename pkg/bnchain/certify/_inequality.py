import operator
from dataclasses import dataclass

from ..errors import CertificateError


_RELATIONS = {
    "==": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}


@dataclass(frozen=True)
class Inequality:
    """A single verified relation ``lhs relation rhs`` between integers,
    stored on certificates so they can be re-audited.
    """

    label: str
    lhs: int
    relation: str
    rhs: int

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"Unknown relation {self.relation!r}.")

    @property
    def holds(self):
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    def __str__(self):
        return f"{self.label}: {self.lhs} {self.relation} {self.rhs}"


def require(checks, step, label, lhs, relation, rhs, **details):
    """Append the relation to checks, raising CertificateError if it fails."""
    check = Inequality(label, int(lhs), relation, int(rhs))
    if not check.holds:
        raise CertificateError(step, relation=str(check), **details)
    checks.append(check)
    return check
