"""
Shared fixtures for the toolkit test-suite
"""

import pytest
from hypothesis import HealthCheck, settings

from app.config import reset_settings

# first calls build fiber tables and sympy expansions
settings.register_profile(
    "qgrass",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("qgrass")


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """Every test starts from the double carrier with default tolerances"""
    for name in ("QGRASS_PRECISION", "QGRASS_TOL", "QGRASS_DEBUG_SYMMETRIC"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    monkeypatch.undo()
    reset_settings()
