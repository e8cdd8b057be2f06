"""Exception classes used throughout bnchain.

All of them derive from a builtin exception, so code that catches
``ValueError`` or ``RuntimeError`` keeps working.
"""


class OutOfRangeError(ValueError):
    """A numeric precondition is violated. The message names the bound."""


class UnsupportedMultiplicityError(ValueError):
    """An index occurs more often than the operation supports."""


class BudgetExceededError(ValueError):
    """A brute-force search was refused because the shape is too large."""

    def __init__(self, cells, budget):
        super().__init__(
            f"Enumeration of {cells} cells exceeds the budget of {budget} cells."
        )
        self.cells = cells
        self.budget = budget


class ImpossibleFillingError(ValueError):
    """No admissible filling (or torsion decoration) exists."""


class MalformedInputError(ValueError):
    """A document or structure does not have the expected form."""


class InconsistentTableError(ValueError):
    """A limit linear series table cannot be turned back into a filling."""


class CertificateError(RuntimeError):
    """A verification step of a certificate failed.

    Parameters:
        step (str): Short name of the failing step.
        details (dict): The values involved (component, pair, order, threshold).
    """

    def __init__(self, step, **details):
        parts = ", ".join(f"{key}={val!r}" for key, val in sorted(details.items()))
        super().__init__(f"Certificate check '{step}' failed: {parts}")
        self.step = step
        self.details = details
