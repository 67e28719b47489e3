import pytest

_RESULTS = {}
_NOTES = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and not rep.failed):
        return
    number, title = marker.args
    ok = rep.passed if rep.when == "call" else False
    prev = _RESULTS.get(number, (title, True))
    _RESULTS[number] = (title, prev[1] and ok)


@pytest.fixture
def flag(request):
    """Record a line to print under this test's criterion in the summary."""
    marker = request.node.get_closest_marker("criterion")
    number = marker.args[0] if marker else None

    def add(text):
        _NOTES.setdefault(number, []).append(text)
    return add


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
        for note in _NOTES.get(number, []):
            terminalreporter.write_line(f"    {note}")
