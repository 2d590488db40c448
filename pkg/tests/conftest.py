import pytest

_verdicts = {}


@pytest.fixture
def verdict(request):
    """Record a one-line acceptance verdict under the test's ``criterion`` mark."""
    mark = request.node.get_closest_marker("criterion")
    key = mark.args[0] if mark else request.node.name
    _verdicts[key] = ("FAIL", request.node.name)

    def ok(detail=""):
        _verdicts[key] = ("PASS", f"{request.node.name} {detail}".strip())

    return ok


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance")
    for key in sorted(_verdicts):
        status, detail = _verdicts[key]
        terminalreporter.write_line(f"{status} criterion {key}: {detail}")
