from pathlib import Path

import pytest

from sepcodes.code import code_parse

DATA = Path(__file__).parent / "data"


def load(name):
    return code_parse((DATA / f"{name}.code").read_text())


@pytest.fixture
def ex1():
    return load("example1")


@pytest.fixture
def ex2():
    return load("example2")


@pytest.fixture
def ex3():
    return load("example3")


@pytest.fixture
def dm3():
    return load("dm3")


# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
