import os

import numpy as np
import pytest

from kclique.generators import example_graph, power_law_graph

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    crit = getattr(report, "_criterion", None)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        prev = _criteria.get(crit)
        # several tests may share a criterion; any failure fails it
        rank = {"FAIL": 2, "PASS": 1, "SKIP": 0}
        if prev is None or rank[status] > rank[prev]:
            _criteria[crit] = status


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep._criterion = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), status in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {num}: {status}  {title}")


@pytest.fixture(scope="session")
def example():
    return example_graph()


@pytest.fixture(scope="session")
def power_law():
    # ~100k vertices, ~1M edges
    n = int(os.environ.get("KCLIQUE_PL_VERTICES", 100_000))
    return power_law_graph(n, avg_degree=20, exponent=2.5, seed=1)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
