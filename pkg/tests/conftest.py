import pytest

CRITERIA: dict = {}


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool):
        CRITERIA[number] = (title, ok)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, ok = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
