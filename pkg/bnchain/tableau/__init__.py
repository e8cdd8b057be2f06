# flake8: noqa

from ._report import Violation, ValidationReport
from ._chain import ChainSpec
from ._filling import RepeatRecord, Filling, transpose, grid_distance_sum
from ._validate import validate_positive, minimal_torsion_chain
from ._weighted import WeightedFilling, validate_weighted, reduce_to_positive
from ._enumerate import (
    DEFAULT_BUDGET,
    enumerate_fillings,
    max_distance_oracle,
    find_filling,
    chain_supports_filling,
)
