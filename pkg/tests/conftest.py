from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from hamcompletion.caterpillar import CaterpillarSpec
from hamcompletion.graph import Graph


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 7) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_vertices: int = 1, max_vertices: int = 7) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [p for p in combinations(range(n), 2) if p not in tree]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=n)) if pairs else []
    return Graph.from_edges(n, tree + extra)


def specs(max_n: int = 6, max_leaves: int = 4):
    return st.lists(st.integers(0, max_leaves), min_size=1, max_size=max_n).map(CaterpillarSpec)


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion, printed at the end of the run

_CRITERIA: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    _CRITERIA.append((number, title, status, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({duration:.2f}s)")
