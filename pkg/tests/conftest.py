import hashlib

import pytest

from animtracks.scene import RenderConfig


def sha(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@pytest.fixture
def small_cfg():
    return RenderConfig(width=480, height=270)


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    item_marks = getattr(report, "acceptance", None)
    if item_marks is None:
        return
    number, title = item_marks
    failed = report.failed
    prev = _ACCEPTANCE.get(number, (title, False, False))
    ran = prev[1] or report.when == "call"
    _ACCEPTANCE[number] = (title, ran, prev[2] or failed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        outcome.get_result().acceptance = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ran, failed = _ACCEPTANCE[number]
        verdict = "FAIL" if failed or not ran else "PASS"
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {title}")
