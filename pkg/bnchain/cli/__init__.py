# flake8: noqa

from ._main import build_parser, run, main
