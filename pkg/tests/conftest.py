import pytest

_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(tag, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    tag, text = marker.args
    detail = dict(item.user_properties).get("detail", "")
    _RESULTS.append((tag, text, report.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for tag, text, passed, detail in _RESULTS:
        status = "PASS" if passed else "FAIL"
        line = f"{status}  [{tag}] {text}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
