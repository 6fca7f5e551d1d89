import numpy as np
import pytest

from chsnorms.graph import Graph, pair_count


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    bits = 0
    for k in range(pair_count(n)):
        if rng.random() < p:
            bits |= 1 << k
    return Graph(n, bits)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


_criteria: dict[int, dict] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria.setdefault(number, {"title": title, "outcomes": []})
            item.user_properties.append(("criterion", number))


def pytest_runtest_logreport(report):
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria[number]["outcomes"].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        runs = entry["outcomes"]
        if not runs:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status:7s} {entry['title']}")
