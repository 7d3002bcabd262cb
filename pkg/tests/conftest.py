import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fgq.qcore import CayleyTable, table_from_function  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}

TWISTED_Z4 = [[0, 1, 2, 3], [1, 2, 3, 0], [3, 0, 1, 2], [2, 3, 0, 1]]


@pytest.fixture
def z3():
    return table_from_function(3, lambda x, y: (x + y) % 3)


@pytest.fixture
def q5():
    return table_from_function(5, lambda x, y: (2 * x + 3 * y + 1) % 5)


@pytest.fixture
def q5e0():
    return table_from_function(5, lambda x, y: (2 * x + 3 * y) % 5)


@pytest.fixture
def twisted_z4():
    return CayleyTable(TWISTED_Z4)


@pytest.fixture
def acceptance_line():
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
