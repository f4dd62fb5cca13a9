import pytest
from hypothesis import strategies as st

from graceful_lab.fixtures import P6, S, T

from oracles import prufer_to_tree

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def T_tree():
    return T


@pytest.fixture
def S_tree():
    return S


@pytest.fixture
def P6_tree():
    return P6


@st.composite
def trees(draw, min_n=1, max_n=12):
    """Random labeled trees decoded from Prüfer sequences."""
    n = draw(st.integers(min_n, max_n))
    seq = tuple(draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0))))
    return prufer_to_tree(seq, n)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
