"""
Shared fixtures for the test suite.
"""

import pytest
from hypothesis import settings

from src.numerics.models import QuadratureConfig
from src.numerics.reference import load_reference, reference_by_n

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def cfg():
    """Default oracle configuration; one instance so the mu_n cache is shared."""
    return QuadratureConfig()


@pytest.fixture(scope="session")
def reference_rows():
    return load_reference()


@pytest.fixture(scope="session")
def reference():
    return reference_by_n()
