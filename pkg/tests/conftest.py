import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grinham.graph import Graph, generate_named  # noqa: E402


@pytest.fixture
def k4():
    return generate_named("complete", [4])


@pytest.fixture
def c6():
    return generate_named("cycle", [6])


@pytest.fixture
def petersen():
    return generate_named("petersen")


@pytest.fixture
def herschel():
    return generate_named("herschel")


def graph(n, *edges):
    return Graph(n, tuple(edges))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
