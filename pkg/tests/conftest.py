from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# criterion number -> (passed, seconds, title), filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n:2d} ({secs:6.2f}s) {title}")
