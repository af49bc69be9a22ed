import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record the PASS/FAIL line for one acceptance criterion and print it."""

    def record(number: int, ok: bool, text: str) -> bool:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}"
        _LINES[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_LINES):
            terminalreporter.write_line(_LINES[n])
