from pathlib import Path

import pytest

from planar4c.graph import PlanarGraph, parse_graph
from planar4c.triangulate import triangulate

DATA = Path(__file__).parent / "data"

_criteria: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        _criteria.append((str(marker.args[0]), item.name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, verdict in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number}: {verdict}  ({name})")


@pytest.fixture
def fig1a_text() -> str:
    return (DATA / "fig1a.graph").read_text()


@pytest.fixture
def fig1a(fig1a_text) -> PlanarGraph:
    return parse_graph(fig1a_text)


@pytest.fixture
def fig1b(fig1a):
    return triangulate(fig1a)


@pytest.fixture
def k3() -> PlanarGraph:
    return PlanarGraph.from_rotation({1: [2, 3], 2: [3, 1], 3: [1, 2]})


@pytest.fixture
def path3() -> PlanarGraph:
    return PlanarGraph.from_edges([(1, 2), (2, 3)])


@pytest.fixture
def star3() -> PlanarGraph:
    return PlanarGraph.from_edges([(1, 2), (1, 3), (1, 4)])
