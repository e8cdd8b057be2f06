# flake8: noqa

from ._layout import SpotLayout, separation_layout, staircase_layout
from ._engine import fill_layout
from ._builders import optimal_separation_filling, staircase_filling
