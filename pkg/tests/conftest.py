"""Shared test fixtures for pddcov.

Fixtures defined here are available to all tests in the suite without
needing an explicit import. Add project-wide fixtures here; keep
domain-specific fixtures close to the tests that use them.
"""
from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from pddcov.core.parallel import set_default_threads
from pddcov.moments.panel import TimeSeriesPanel


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run full-size acceptance tests"
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _reset_worker_cap() -> Iterator[None]:
    """Undo any process-wide worker cap a CLI invocation left behind."""
    yield
    set_default_threads(None)


@pytest.fixture()
def package_name() -> str:
    """Return the importable package name for assertions."""
    return "pddcov"


@pytest.fixture()
def expected_version() -> str:
    """Return the current expected version string.

    Update this fixture when cutting a release so that the version
    test immediately catches stale ``__version__`` values.
    """
    return "0.1.0"


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture()
def gaussian_panel(rng: np.random.Generator) -> TimeSeriesPanel:
    """Independent standard normal panel, p=6, n=120."""
    return TimeSeriesPanel(rng.standard_normal((6, 120)))


@pytest.fixture()
def panel_csv(tmp_path: Path, gaussian_panel: TimeSeriesPanel) -> Path:
    """``gaussian_panel`` written to a CSV file."""
    path = tmp_path / "panel.csv"
    gaussian_panel.to_csv(path)
    return path
