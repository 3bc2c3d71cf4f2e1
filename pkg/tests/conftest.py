import pytest

ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def record_ac():
    """Record a pass/fail line for an acceptance criterion."""
    def record(criterion: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[criterion] = ("PASS" if passed else "FAIL", detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k[2:])):
        status, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key}: {status}  {detail}")
