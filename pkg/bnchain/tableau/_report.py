from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """A single failed condition.

    Attributes:
        kind (str): A short machine-readable tag, e.g. "row-order".
        message (str): Human readable description.
        cells (tuple): The (row, col) cells involved, if any.
    """

    kind: str
    message: str
    cells: tuple = ()


class ValidationReport:
    """The outcome of a validation: a list of violations, empty when valid.

    Parameters:
        subject (str): What was validated, e.g. "filling".
        violations (iterable): The Violation objects found.
    """

    def __init__(self, subject, violations=()):
        self._subject = subject
        self._violations = tuple(violations)

    def __repr__(self):
        state = "valid" if self.valid else f"{len(self._violations)} violations"
        return f"<ValidationReport {self._subject}: {state}>"

    def __bool__(self):
        return self.valid

    @property
    def subject(self):
        return self._subject

    @property
    def violations(self):
        return self._violations

    @property
    def valid(self):
        return not self._violations

    def kinds(self):
        """The set of violation kinds present."""
        return {v.kind for v in self._violations}
