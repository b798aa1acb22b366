import pytest

from lccp import parse

EXAMPLE = "ab??a???bcab?"

# LCCP table of the running example: row j (transit), column i = 1..13
EXAMPLE_TABLE = {
    1: [13, 0, 8, 1, 4, 4, 7, 4, 0, 0, 3, 0, 1],
    3: [8, 7, 11, 6, 6, 8, 2, 2, 5, 2, 3, 2, 1],
    5: [4, 0, 6, 5, 9, 4, 4, 6, 0, 0, 3, 0, 1],
    6: [4, 3, 8, 5, 4, 8, 3, 3, 5, 4, 3, 2, 1],
    9: [0, 3, 5, 1, 0, 5, 2, 1, 5, 0, 0, 2, 1],
    13: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
}

# documented counterexample to a row-descending fill
FILL_ORDER_WORD = "aaaaaaaaaa?"


@pytest.fixture
def example_word():
    return parse(EXAMPLE)


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
