import pytest

A1 = (2, -2, 0, -2)
B1 = (2, -2, 0, -2, 2, -2, 0, -2)
# the 28-entry reference upper bound, copied entry by entry
C1 = (2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2,
      -2, -2, 0, -2, 2, -2, 0, -2, 2, -2, 0, -2)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def example1():
    return C1, A1, B1


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
