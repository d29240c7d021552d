import time

import pytest
from hypothesis import HealthCheck, settings

from rfcalc.theorems import derivative_table_check, run_catalog

# Numeric properties are slow per example; derandomize keeps CI stable.
settings.register_profile(
    "suite",
    max_examples=50,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def catalog_run():
    """One full catalog pass at the default tolerance, with wall time."""
    t0 = time.perf_counter()
    reports = run_catalog(1e-6)
    elapsed = time.perf_counter() - t0
    return reports, elapsed


@pytest.fixture(scope="session")
def table_reports():
    return derivative_table_check(1e-5)
