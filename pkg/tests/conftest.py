import sys

import numpy as np
import pytest

from wbcentral import Euler, Grid


@pytest.fixture
def euler():
    return Euler(1.4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def sine_cell_averages(grid, t=0.0, speed=1.0):
    """Exact cell averages of sin(2 pi (x - speed t)) on the interior cells."""
    x, dx = grid.interior_centers, grid.dx
    k = 2.0 * np.pi
    return (np.cos(k * (x - 0.5 * dx - speed * t)) - np.cos(k * (x + 0.5 * dx - speed * t))) / (k * dx)


@pytest.fixture
def periodic_grid():
    return Grid(100, boundary="periodic")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
