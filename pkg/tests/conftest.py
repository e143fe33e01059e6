import pytest

from lieposet.poset import from_generators


@pytest.fixture
def path3():
    # solid path 1-2-3
    return from_generators("C", 3, [(-2, 1), (-2, 3)])


@pytest.fixture
def fig3():
    # loop at 3, solid {1,3}, dashed {2,3}
    return from_generators("C", 3, [(-3, -2), (-3, 1), (-3, 3)])


@pytest.fixture
def one_edge():
    return from_generators("C", 2, [(-1, 2)])


@pytest.fixture
def dashed_edge():
    return from_generators("C", 2, [(-2, -1)])


@pytest.fixture
def triangle():
    return from_generators("C", 3, [(-1, 2), (-2, 3), (-1, 3)])


@pytest.fixture
def edge_and_triangle():
    return from_generators("C", 5, [(-1, 2), (-3, 4), (-4, 5), (-3, 5)])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
