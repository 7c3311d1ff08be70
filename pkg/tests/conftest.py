import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from evcover.graph import bowtie, complete_graph, cycle_graph, path_graph, star_graph  # noqa: E402


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def P4():
    return path_graph(4)


@pytest.fixture
def C4():
    return cycle_graph(4)


@pytest.fixture
def K4():
    return complete_graph(4)


@pytest.fixture
def BOWTIE():
    return bowtie()


@pytest.fixture
def STAR():
    return star_graph(3)


_CRITERIA: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = rep.failed
    if rep.when == "call" or failed:
        detail = getattr(item, "criterion_detail", "")
        if failed or number not in _CRITERIA:
            _CRITERIA[number] = ("FAIL" if failed else "PASS", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title, detail = _CRITERIA[number]
        line = f"{status} criterion {number}: {title}"
        terminalreporter.write_line(f"{line} ({detail})" if detail else line)
