from ..tableau import ValidationReport, Violation
from ._table import LimitSeriesTable, LineBundleDescriptor


def elliptic_component_check(u_row, v_row, d, bundle, torsion=None):
    """Check the vanishing data of a series on a single elliptic component.

    A section vanishing to orders u at P and v at Q has u + v <= d, and
    equality means the bundle is O(uP + vQ). Two sections can only both
    reach equality when P - Q is torsion of an order dividing their gap.

    Parameters:
        u_row (sequence): The strictly increasing orders at P.
        v_row (sequence): The strictly decreasing orders at Q.
        d (int): The degree of the bundle.
        bundle (LineBundleDescriptor): The bundle on the component.
        torsion (int, optional): The torsion order of P - Q, if any.
    """
    u_row = [int(x) for x in u_row]
    v_row = [int(x) for x in v_row]
    if len(u_row) != len(v_row):
        raise ValueError(f"Rows differ in length: {len(u_row)} vs {len(v_row)}.")
    if not isinstance(bundle, LineBundleDescriptor):
        raise TypeError(f"Expected LineBundleDescriptor, got {type(bundle).__name__}.")

    violations = []
    if any(x >= y for x, y in zip(u_row[:-1], u_row[1:])):
        violations.append(
            Violation("order", f"u = {u_row} is not strictly increasing.")
        )
    if any(x <= y for x, y in zip(v_row[:-1], v_row[1:])):
        violations.append(
            Violation("order", f"v = {v_row} is not strictly decreasing.")
        )
    if bundle.degree != d:
        violations.append(
            Violation("degree", f"The bundle {bundle} does not have degree {d}.")
        )

    full = []
    for slot, (u, v) in enumerate(zip(u_row, v_row)):
        if u + v > d:
            violations.append(
                Violation("degree-bound", f"Slot {slot} has u + v = {u + v} > {d}.")
            )
        elif u + v == d:
            full.append(slot)
            if not bundle.is_special:
                violations.append(
                    Violation(
                        "generic-equality",
                        f"Slot {slot} reaches u + v = {d} on a generic bundle.",
                    )
                )
            elif not bundle.equivalent(u, v, torsion):
                violations.append(
                    Violation(
                        "bundle-mismatch",
                        f"Slot {slot} forces O({u}P+{v}Q), but the bundle is {bundle}.",
                    )
                )

    for k1, k2 in zip(full[:-1], full[1:]):
        gap = u_row[k2] - u_row[k1]
        if torsion is None:
            violations.append(
                Violation(
                    "missing-torsion",
                    f"Slots {k1} and {k2} both reach u + v = {d} without torsion.",
                )
            )
        elif gap % torsion:
            violations.append(
                Violation(
                    "torsion-gap",
                    f"Torsion order {torsion} does not divide the gap {gap} "
                    f"between slots {k1} and {k2}.",
                )
            )

    return ValidationReport("elliptic component", violations)


def validate_series(table):
    """Check a LimitSeriesTable: boundary vanishing at P_1 and Q_g, strict
    sequences, refinedness at the nodes, sums u + v in {d-1, d}, and the
    conditions on every elliptic component.
    """
    if not isinstance(table, LimitSeriesTable):
        raise TypeError(f"Expected LimitSeriesTable, got {type(table).__name__}.")
    p = table.p
    g, r, d = p.triple
    u, v = table.u, table.v
    violations = []

    for j in range(r + 1):
        if u[0, j] != j:
            violations.append(
                Violation("boundary", f"u[1][{j}] = {u[0, j]}, expected {j}.")
            )
        if v[g - 1, j] != r - j:
            violations.append(
                Violation("boundary", f"v[{g}][{j}] = {v[g - 1, j]}, expected {r - j}.")
            )

    for i in range(1, g + 1):
        urow, vrow = table.vanishing(i)
        for j in range(r + 1):
            total = urow[j] + vrow[j]
            if total not in (d - 1, d):
                violations.append(
                    Violation(
                        "sum-range",
                        f"u[{i}][{j}] + v[{i}][{j}] = {total} is not in {{{d - 1}, {d}}}.",
                    )
                )
            if i < g and int(u[i, j]) + vrow[j] != d:
                violations.append(
                    Violation(
                        "refinedness",
                        f"u[{i + 1}][{j}] + v[{i}][{j}] = {int(u[i, j]) + vrow[j]} != {d}.",
                    )
                )
        report = elliptic_component_check(
            urow, vrow, d, table.bundle(i), table.chain.torsion(i)
        )
        for violation in report.violations:
            violations.append(
                Violation(violation.kind, f"Component {i}: {violation.message}")
            )

    return ValidationReport("limit series", violations)
