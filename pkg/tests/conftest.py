import sys

import pytest

_RESULTS = pytest.StashKey[list]()

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def record_criterion(request):
    """Call with (label, passed, detail); the line shows up in the summary."""
    results = request.config.stash[_RESULTS]

    def record(label, passed, detail=""):
        results.append((label, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in sorted(results, key=lambda r: int(r[0][2:])):
        terminalreporter.write_line(f"{label} {'PASS' if passed else 'FAIL'}  {detail}")
