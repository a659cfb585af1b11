import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from logscale import make_config  # noqa: E402

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def cfg():
    return make_config(264, 4)


@pytest.fixture
def data_dir():
    return DATA


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


_criteria = {}


def pytest_runtest_logreport(report):
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    title = dict(report.user_properties)["criterion_title"]
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(number, (title, True))
        _criteria[number] = (title, prev[1] and report.outcome == "passed")


@pytest.fixture(autouse=True)
def _criterion_props(request, record_property):
    marker = request.node.get_closest_marker("criterion")
    if marker:
        record_property("criterion", marker.args[0])
        record_property("criterion_title", marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")
