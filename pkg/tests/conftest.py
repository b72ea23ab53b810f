import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion.

    The lines are echoed immediately (visible with -s) and replayed in
    the terminal summary so they survive output capture.
    """
    def record(number, title, ok):
        line = f"ACCEPTANCE {number:02d} {title}: {'pass' if ok else 'fail'}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
