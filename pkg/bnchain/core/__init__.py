# flake8: noqa

from ._params import Rectangle, BnParams, rho, serre_dual
from ._numerology import (
    TriangularDecomposition,
    kj_decompose,
    separation_limit,
    check_separation_range,
    max_distance_bound,
    RangeReport,
    existence_ranges,
)
