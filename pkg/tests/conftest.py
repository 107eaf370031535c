"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

import pytest

_RESULTS: dict[str, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(code, name): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    code, name = marker.args
    failed = report.failed or (report.when == "call" and report.outcome != "passed")
    prev = _RESULTS.get(code, (name, True))
    if report.when == "call" or failed:
        _RESULTS[code] = (name, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for code in sorted(_RESULTS):
        name, ok = _RESULTS[code]
        terminalreporter.write_line(f"ACCEPTANCE [{code}] {name}: {'PASS' if ok else 'FAIL'}")
