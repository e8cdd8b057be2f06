import logging

from ..core import max_distance_bound
from ..tableau import grid_distance_sum, minimal_torsion_chain, validate_positive
from ._engine import fill_layout
from ._layout import separation_layout, staircase_layout


logger = logging.getLogger(__name__)


def _check_admissible(f):
    report = validate_positive(f, minimal_torsion_chain(f))
    if not report:
        raise RuntimeError(
            f"Constructed filling {f} is not admissible: {report.violations[0].message}"
        )


def _check_reserved(f, layout):
    expected = set(layout.bottom_cells()) | set(layout.top_cells())
    found = set()
    for record in f.repeats():
        found.update(record.occurrences)
    if found != expected:
        raise RuntimeError(
            f"Doubled indices of {f} occupy {sorted(found)}, "
            f"expected the reserved boxes {sorted(expected)}."
        )


def optimal_separation_filling(alpha, beta, e):
    """Build an admissible alpha x beta filling with e doubled indices
    whose grid distance sum is max_distance_bound(alpha, beta, e).

    The doubled indices sit on the spots closest to the top-right and
    bottom-left corners, deficiency by deficiency.
    """
    layout = separation_layout(alpha, beta, e)
    f = fill_layout(layout)
    _check_admissible(f)
    _check_reserved(f, layout)
    total = grid_distance_sum(f)
    bound = max_distance_bound(alpha, beta, e)
    if total != bound:
        raise RuntimeError(f"Distance sum {total} of {f} misses the bound {bound}.")
    logger.info("Separation filling %dx%d e=%d, distance sum %d", alpha, beta, e, total)
    return f


def staircase_filling(alpha, beta, g):
    """Build an admissible alpha x beta filling that uses every index
    1..g, exactly alpha*beta - g of them twice.

    The doubled indices fill staircase-shaped regions at the top-right
    and bottom-left corners, as given by ``staircase_layout()``.
    """
    layout = staircase_layout(alpha, beta, g)
    f = fill_layout(layout)
    _check_admissible(f)
    _check_reserved(f, layout)
    if f.distinct_indices() != list(range(1, g + 1)):
        raise RuntimeError(f"Filling {f} does not use every index in 1..{g}.")
    doubled = len(f.repeats())
    if doubled != layout.e:
        raise RuntimeError(
            f"Filling {f} doubles {doubled} indices, expected {layout.e}."
        )
    logger.info(
        "Staircase filling %dx%d g=%d (%s layout, e=%d)",
        alpha,
        beta,
        g,
        layout.source,
        layout.e,
    )
    return f
