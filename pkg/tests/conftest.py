import mpmath
import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion for the summary."""
    def _record(label, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
        return passed
    return _record


@pytest.fixture
def mp():
    """Private 50-digit mpmath context used as an independent oracle."""
    ctx = mpmath.mp.clone()
    ctx.dps = 50
    return ctx


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
