import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record a one-line acceptance verdict for the terminal summary."""
    key = request.node.name

    def record(label, ok, detail=""):
        _CRITERIA[key] = (label, ok, detail)
        return ok

    return record


def pytest_runtest_logreport(report):
    key = report.nodeid.rsplit("::", 1)[-1]
    if report.when == "call" and key in _CRITERIA and report.failed:
        label, _, detail = _CRITERIA[key]
        _CRITERIA[key] = (label, False, detail or "assertion failed")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in sorted(_CRITERIA.values(), key=lambda t: t[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")
