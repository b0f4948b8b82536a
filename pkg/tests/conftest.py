import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperhopf import limits  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def _restore_limits():
    previous = limits.current()
    yield
    limits.set_limits(previous)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
