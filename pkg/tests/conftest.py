import pytest

from sl3web.growth import grow
from sl3web.polyring import VariableOrder
from sl3web.weightpath import parse_string
from sl3web.webgraph import clasp, make_web

NINE_STRING = "+1,+1,+0,-1,+0,+-1,-0,+-1,--1"

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def single_edge():
    return make_web([("B", [1]), ("W", [2])], [], [(1, 2)])


@pytest.fixture
def h_web():
    # u white joined to 1, 4 and w; w black joined to 2, 3 and u; rotations counterclockwise
    return make_web(
        [("B", [1]), ("W", [2]), ("W", [3]), ("B", [4])],
        [(5, "W", [11, 12, 13]), (6, "B", [21, 22, 23])],
        [(1, 12), (4, 13), (11, 22), (2, 21), (3, 23)],
    )


@pytest.fixture
def tripod():
    return make_web(
        [("B", [1]), ("B", [2]), ("B", [3])],
        [(4, "W", [13, 12, 11])],
        [(1, 11), (2, 12), (3, 13)],
    )


@pytest.fixture
def nine_string():
    return parse_string(NINE_STRING)


@pytest.fixture
def flat_web():
    return grow(parse_string("+1,-1,+0,+-1,+-1")).web


@pytest.fixture
def clasped_web(flat_web):
    return clasp(flat_web, (1, 1, 1, 2))


@pytest.fixture
def bwwb():
    return VariableOrder(("B", "W", "W", "B"))
