import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lexgkz import PointSet  # noqa: E402

SQ_PTS = [(0, 0), (1, 0), (0, 1), (1, 1)]
SQC_PTS = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
PENT_PTS = [(0, 0), (2, 0), (3, 2), (1, 4), (-1, 2)]
HEX_PTS = [(0, 0), (2, 0), (3, 2), (2, 4), (0, 4), (-1, 2)]
MOAE_PTS = [(0, 0), (4, 0), (0, 4), (1, 1), (2, 1), (1, 2)]
CUBE_PTS = list(itertools.product((0, 1), repeat=3))

CONFIGS = {
    "SQ": SQ_PTS,
    "SQC": SQC_PTS,
    "PENT": PENT_PTS,
    "HEX": HEX_PTS,
    "MOAE": MOAE_PTS,
    "CUBE": CUBE_PTS,
}


@pytest.fixture
def SQ():
    return PointSet(SQ_PTS)


@pytest.fixture
def SQC():
    return PointSet(SQC_PTS)


@pytest.fixture
def PENT():
    return PointSet(PENT_PTS)


@pytest.fixture
def HEX():
    return PointSet(HEX_PTS)


@pytest.fixture
def CUBE():
    return PointSet(CUBE_PTS)


@pytest.fixture
def MOAE():
    return PointSet(MOAE_PTS)


# one pass/fail line per acceptance criterion at the end of the run

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    num, title = marker.args
    prev = _criteria.get(num, (title, "PASS"))[1]
    status = "FAIL" if rep.failed or prev == "FAIL" else "PASS"
    _criteria[num] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, status = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {title}")
