import logging
from math import gcd
from functools import reduce

from ..errors import ImpossibleFillingError
from ._chain import ChainSpec
from ._filling import Filling
from ._report import ValidationReport, Violation


logger = logging.getLogger(__name__)


def _order_violations(f):
    cells = f.cells
    found = []
    for r in range(f.beta):
        for c in range(f.alpha):
            here = int(cells[r, c])
            if c + 1 < f.alpha and here >= cells[r, c + 1]:
                found.append(
                    Violation(
                        "row-order",
                        f"Row {r + 1} is not strictly increasing at columns {c + 1}, {c + 2}.",
                        ((r + 1, c + 1), (r + 1, c + 2)),
                    )
                )
            if r + 1 < f.beta and here >= cells[r + 1, c]:
                found.append(
                    Violation(
                        "column-order",
                        f"Column {c + 1} is not strictly increasing at rows {r + 1}, {r + 2}.",
                        ((r + 1, c + 1), (r + 2, c + 1)),
                    )
                )
    return found


def validate_positive(f, chain):
    """Check that a filling is admissible on the given chain.

    A filling is admissible when rows and columns strictly increase,
    all indices lie in 1..g, and every repeated index sits on a special
    component whose torsion order divides the grid distance between
    consecutive occurrences.
    """
    if not isinstance(f, Filling):
        raise TypeError(f"Expected Filling, got {type(f).__name__}.")
    if not isinstance(chain, ChainSpec):
        raise TypeError(f"Expected ChainSpec, got {type(chain).__name__}.")

    violations = []
    if chain.g != f.g:
        violations.append(
            Violation(
                "chain-mismatch",
                f"The chain has {chain.g} components but the filling uses 1..{f.g}.",
            )
        )
    # an index outside 1..chain.g names no component
    top = min(f.g, chain.g)
    for cell, index in f.boxes():
        if not 1 <= index <= top:
            violations.append(
                Violation("index-range", f"Index {index} is not in 1..{top}.", (cell,))
            )
    violations.extend(_order_violations(f))

    for record in f.repeats():
        order = chain.torsion(record.index)
        if order is None:
            violations.append(
                Violation(
                    "generic-repeat",
                    f"Index {record.index} is repeated but component {record.index} is generic.",
                    record.occurrences,
                )
            )
            continue
        pairs = zip(record.occurrences[:-1], record.occurrences[1:])
        for (c1, c2), dist in zip(pairs, record.pair_distances):
            if dist % order:
                violations.append(
                    Violation(
                        "torsion-divisibility",
                        f"Torsion order {order} of component {record.index} "
                        f"does not divide the grid distance {dist}.",
                        (c1, c2),
                    )
                )

    return ValidationReport("filling", violations)


def minimal_torsion_chain(f):
    """The weakest chain decoration on which the filling is admissible:
    each repeated index gets the torsion order equal to the grid distance
    of its occurrences (the gcd of consecutive distances for 3+
    occurrences).
    """
    if not isinstance(f, Filling):
        raise TypeError(f"Expected Filling, got {type(f).__name__}.")
    bad = _order_violations(f)
    if bad:
        raise ImpossibleFillingError(f"The filling is not monotone: {bad[0].message}")
    special = {}
    for record in f.repeats():
        order = reduce(gcd, record.pair_distances)
        if order <= 1:
            raise ImpossibleFillingError(
                f"Index {record.index} needs torsion order {order}; orders must be >= 2."
            )
        special[record.index] = order
    logger.debug("Minimal chain for %r has %d special components", f, len(special))
    return ChainSpec(f.g, special)
