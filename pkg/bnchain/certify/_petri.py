"""Petri certificates: the surjectivity of the Petri map on a component
is reduced to finding g products s_i t_j of sections of L and K - L whose
limit canonical sections concentrate on pairwise distinct components.
"""

import logging
from dataclasses import dataclass

from ..construct import staircase_filling, staircase_layout
from ..core import BnParams
from ..errors import CertificateError, OutOfRangeError
from ..series import dual_series, filling_to_series
from ..tableau import ChainSpec, Filling, minimal_torsion_chain, validate_positive
from ._inequality import require


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PetriProduct:
    """The product s_i t_j, concentrated on component k.

    Attributes:
        i (int): The column of the filling (section s_i of L).
        j (int): The row of the filling (section t_j of K - L), i.e. the
            column of the transposed filling.
        k (int): The component on which the product concentrates.
    """

    i: int
    j: int
    k: int


@dataclass(frozen=True)
class PetriCertificate:
    """A list of g products with pairwise distinct concentration components.

    Attributes:
        p (BnParams): The parameters.
        f (Filling): The underlying filling.
        chain (ChainSpec): The chain the filling is admissible on.
        products (tuple): The PetriProduct objects, sorted by k.
        checks (tuple): The verified Inequality records.
        skipped (tuple): (step, reason) for every check that was not made.
    """

    p: BnParams
    f: Filling
    chain: ChainSpec
    products: tuple
    checks: tuple
    skipped: tuple = ()

    @property
    def size(self):
        return len(self.products)

    def column_counts(self):
        """The number of products per column of the filling."""
        counts = [0] * self.f.alpha
        for product in self.products:
            counts[product.i - 1] += 1
        return counts


def petri_certificate(f, p, chain, *, excluded=()):
    """Build and verify the Petri certificate of an admissible filling.

    One occurrence is chosen for each index k, the one in the top-most row,
    giving the product s_i t_j where (j, i) is that box. Each s_i reaches
    u + v = d and each t_j reaches u + v = 2g-2-d on component k, so the
    product concentrates there.

    Parameters:
        f (Filling): An admissible filling for p on the chain.
        p (BnParams): The parameters.
        chain (ChainSpec): The chain.
        excluded (iterable): Boxes (row, col) that may not be chosen.
    """
    if not isinstance(f, Filling):
        raise TypeError(f"Expected Filling, got {type(f).__name__}.")
    if not isinstance(p, BnParams):
        raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    if (f.alpha, f.beta, f.g) != (p.alpha, p.beta, p.g):
        raise ValueError(f"The {f.alpha}x{f.beta} filling does not fit {p}.")
    report = validate_positive(f, chain)
    if not report:
        raise ValueError(
            f"The filling is not admissible: {report.violations[0].message}"
        )

    excluded = {tuple(cell) for cell in excluded}
    products = []
    for k, cells in f.occurrences().items():
        usable = [cell for cell in cells if cell not in excluded]
        if usable:
            row, col = usable[0]
            products.append(PetriProduct(col, row, k))

    g, r, d = p.triple
    checks = []
    require(checks, "product-count", "number of products", len(products), "==", g)
    require(
        checks,
        "distinct-components",
        "distinct concentration components",
        len({x.k for x in products}),
        "==",
        len(products),
    )

    series = filling_to_series(f, p, chain)
    skipped = []
    if p.beta > 1:
        dual = dual_series(f, p, chain)
    else:
        # the dual would have r = 0
        dual = None
        reason = "K - L has a single section when g-d+r = 1"
        skipped.append(("full-sum t_j", reason))
        logger.info("Petri certificate for %r skips the t_j sums: %s", p, reason)
    for x in products:
        if f.index_at(x.j, x.i) != x.k:
            raise CertificateError("placement", product=(x.i, x.j), k=x.k)
        u, v = series.vanishing(x.k)
        label = f"s_{x.i} on component {x.k}"
        require(checks, "full-sum", label, u[x.i - 1] + v[x.i - 1], "==", d)
        if dual is not None:
            u, v = dual.vanishing(x.k)
            label = f"t_{x.j} on component {x.k}"
            total = u[x.j - 1] + v[x.j - 1]
            require(checks, "full-sum", label, total, "==", 2 * g - 2 - d)

    logger.info("Petri certificate for %r with %d products", p, len(products))
    return PetriCertificate(
        p, f, chain, tuple(products), tuple(checks), skipped=tuple(skipped)
    )


@dataclass(frozen=True)
class ComponentWitness:
    """Everything that shows a component of codimension e of the locus of
    curves with a g^r_d, with surjective Petri map at its general point.
    """

    p: BnParams
    layout: object
    filling: Filling
    chain: ChainSpec
    series: object
    certificate: PetriCertificate


def component_witness(p):
    """Build the staircase filling for p (in the orientation alpha <= beta),
    its minimal torsion chain, the limit series and the Petri certificate.

    Requires 0 < e <= g - 2.
    """
    if not isinstance(p, BnParams):
        raise TypeError(f"Expected BnParams, got {type(p).__name__}.")
    if not p.is_canonical:
        p = BnParams.normalized(*p.triple)
    g, e = p.g, p.e
    if not 0 < e <= g - 2:
        raise OutOfRangeError(f"Expected 0 < e <= g-2 = {g - 2}, got e = {e} for {p}.")

    layout = staircase_layout(p.alpha, p.beta, g)
    f = staircase_filling(p.alpha, p.beta, g)
    chain = minimal_torsion_chain(f)
    series = filling_to_series(f, p, chain)
    cert = petri_certificate(f, p, chain)

    # doubled indices are certified by their top-right occurrence
    counts = cert.column_counts()
    checks = list(cert.checks)
    for col in range(1, p.alpha + 1):
        label = f"products in column {col}"
        expected = p.beta - layout.bottom(col)
        require(checks, "column-count", label, counts[col - 1], "==", expected)
    total = sum(p.beta - layout.bottom(col) for col in range(1, p.alpha + 1))
    require(checks, "counting", "sum of column counts", total, "==", g)
    cert = PetriCertificate(
        cert.p, cert.f, cert.chain, cert.products, tuple(checks), cert.skipped
    )
    logger.info("Component witness for %r (e=%d, %s layout)", p, e, layout.source)
    return ComponentWitness(p, layout, f, chain, series, cert)
