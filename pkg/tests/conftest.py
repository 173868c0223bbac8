import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(num, label): top-level acceptance criterion; one summary "
        "line per criterion is printed at the end of the run",
    )


_results = {}


def pytest_runtest_logreport(report):
    if report.when not in ("setup", "call"):
        return
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    num, label = marker
    ok = _results.get(num, (True, label))[0]
    _results[num] = (ok and report.passed, label)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report._criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        ok, label = _results[num]
        terminalreporter.write_line(
            "criterion %d: %s - %s" % (num, "PASS" if ok else "FAIL", label)
        )
