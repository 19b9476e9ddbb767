import pytest
from hypothesis import strategies as st

from hyperideals import HyperTable, mask
from hyperideals.search import all_hypersemigroups


# Warm the order-3 pool up front so hypothesis does not time its construction.
all_hypersemigroups(3)


def S(*elems):
    return mask(elems)


@st.composite
def tables(draw, min_order=1, max_order=3):
    n = draw(st.integers(min_order, max_order))
    cells = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=n * n, max_size=n * n))
    return HyperTable(n, tuple(cells))


@st.composite
def hypersemigroups(draw, max_order=3):
    n = draw(st.integers(1, max_order))
    pool = all_hypersemigroups(n)
    return pool[draw(st.integers(0, len(pool) - 1))]


def subsets_of(n):
    return st.integers(1, (1 << n) - 1)


@pytest.fixture(scope="session")
def order3_hypersemigroups():
    return all_hypersemigroups(3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
