import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        failed = report.outcome != "passed"
        prev = _RESULTS.get(key, (False, 0.0))
        _RESULTS[key] = (prev[0] or failed, prev[1] + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (failed, seconds) in sorted(_RESULTS.items()):
        status = "FAIL" if failed else "PASS"
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}  ({seconds:.2f}s)")
