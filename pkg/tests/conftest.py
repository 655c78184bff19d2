import pytest

from hamparity import Digraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def triangle():
    return Digraph.cycle([1, 2, 3])


@pytest.fixture
def bidirected_triangle():
    return Digraph.from_edges(3, [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)])


@pytest.fixture
def four_cycle():
    # 1 -> 3 -> 2 -> 4 -> 1, bipartite with classes {1,2} and {3,4}
    return Digraph.cycle([1, 3, 2, 4])
