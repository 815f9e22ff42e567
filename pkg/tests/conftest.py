import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" and not report.failed:
        return
    status = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
    for marker in item.iter_markers("criterion"):
        number, title = marker.args
        _, old_status, old_seconds = _RESULTS.get(number, (title, "PASS", 0.0))
        worst = old_status if old_status != "PASS" else status
        _RESULTS[number] = (title, worst, old_seconds + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, status, seconds = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}  {status}  {title}  ({seconds:.3f} s)")
