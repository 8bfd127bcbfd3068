import pytest

from wpcnsim.sweep import default_sweep


@pytest.fixture(scope="session")
def default_table():
    """The standard study grid, evaluated once per test session."""
    return default_sweep()
