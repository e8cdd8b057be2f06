# flake8: noqa

from ._table import LineBundleDescriptor, LimitSeriesTable
from ._checks import elliptic_component_check, validate_series
from ._translate import filling_to_series, series_to_filling, dual_series
