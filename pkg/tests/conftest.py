import pytest

RESULTS = {}


@pytest.fixture
def record():
    """record(n, ok, detail) stores one acceptance criterion verdict."""
    def _record(n, ok, detail=""):
        RESULTS[n] = (ok, detail)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
