"""Global configuration for pytest"""
import os

import pytest
from hypothesis import settings

from bnchain import load_document


FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "tests", "fixtures")

# property tests draw the same examples on every run
settings.register_profile("bnchain", derandomize=True, deadline=None)
settings.load_profile("bnchain")


def read_fixture(name):
    """Get the text of a file in tests/fixtures."""
    with open(os.path.join(FIXTURES, name), "rb") as f:
        return f.read().decode()


@pytest.fixture
def document():
    """Load a golden JSON document by name, e.g. ``document("corner_r4")``."""

    def load(name):
        return load_document(read_fixture(name + ".json"))

    return load


@pytest.fixture
def golden():
    """Read a golden text file by name, e.g. ``golden("one_by_one.txt")``."""
    return read_fixture
