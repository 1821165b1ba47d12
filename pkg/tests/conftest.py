import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        elapsed = dict(item.user_properties).get("elapsed")
        _criteria[number] = (title, report.outcome, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome, elapsed = _criteria[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        timing = f" ({elapsed:.1f}s)" if elapsed is not None else ""
        terminalreporter.write_line(f"[{verdict}] criterion {number:2d}: {title}{timing}")
