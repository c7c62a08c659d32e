from __future__ import annotations

import random

import pytest

from perspectra.graphcore import Graph, enumerate_connected_bipartite

_acceptance_results: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if marker:
        cid, title = marker
        # parametrized criteria report once per case; any failing case fails the criterion
        if _acceptance_results.get(cid, (title, "PASS"))[1] == "FAIL":
            return
        _acceptance_results[cid] = (title, "PASS" if report.passed else "FAIL")


def pytest_runtest_setup(item):
    m = item.get_closest_marker("acceptance")
    if m:
        item.user_properties.append(("acceptance", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_acceptance_results, key=lambda c: int(c.lstrip("AC"))):
        title, status = _acceptance_results[cid]
        terminalreporter.write_line(f"{status} {cid}: {title}")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def census_graphs() -> dict[int, list[Graph]]:
    """Connected bipartite class representatives for n = 1..8."""
    return {n: list(enumerate_connected_bipartite(n)) for n in range(1, 9)}
