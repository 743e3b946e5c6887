"""
Shared test configuration.

Provides reference-state fixtures and settings isolation, and prints the
closed-form discrepancy table at the end of the run.
"""

import os
import sys
from typing import Generator

import pytest

# Add package directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from qqcorr.core.config import get_settings
from qqcorr.models.state import DensityMatrix
from qqcorr.services.states import initial_state
from tests.helpers import classical_quantum_state, product_state


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Rebuild cached settings around every test so env patches take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rho_015() -> DensityMatrix:
    return initial_state(0.15)


@pytest.fixture
def rho_023() -> DensityMatrix:
    return initial_state(0.23)


@pytest.fixture
def rho_pure() -> DensityMatrix:
    return initial_state(0.0)


@pytest.fixture
def rho_separable() -> DensityMatrix:
    return initial_state(1.0 / 3.0)


@pytest.fixture
def rho_product() -> DensityMatrix:
    return product_state()


@pytest.fixture
def rho_cq() -> DensityMatrix:
    return classical_quantum_state()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print closed-form values against the numerical pipeline."""
    if os.environ.get("QQCORR_SKIP_DISCREPANCY_REPORT"):
        return
    from qqcorr.services.oracles import build_discrepancy_report, format_discrepancy_report

    try:
        table = format_discrepancy_report(build_discrepancy_report())
    except Exception as exc:  # the report must never fail the run
        terminalreporter.write_line(f"discrepancy report unavailable: {exc}")
        return
    terminalreporter.section("closed-form discrepancy report")
    for line in table.splitlines():
        terminalreporter.write_line(line)
