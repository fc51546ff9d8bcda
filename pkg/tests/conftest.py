import itertools

import pytest
from hypothesis import strategies as st

from ppsym.planepart import Box, PlanePartition

_acceptance = []


@st.composite
def plane_partitions(draw, a, b, c):
    """Uniform-ish random plane partition: raw heights, then running minima."""
    raw = draw(st.lists(st.integers(0, c), min_size=a * b, max_size=a * b))
    h = [[0] * b for _ in range(a)]
    for i, j in itertools.product(range(a), range(b)):
        v = raw[i * b + j]
        if i:
            v = min(v, h[i - 1][j])
        if j:
            v = min(v, h[i][j - 1])
        h[i][j] = v
    return PlanePartition(Box(a, b, c), tuple(map(tuple, h)))


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance):
        terminalreporter.write_line(f"{name}: {'PASS' if outcome == 'passed' else 'FAIL'}")


@pytest.fixture
def box222():
    return Box(2, 2, 2)
