import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, label = mark.args
    failed = report.failed or (report.when == "call" and report.skipped)
    prev = _RESULTS.get(num, (label, True))
    _RESULTS[num] = (label, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        label, ok = _RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{num:02d}] {label}")
