import pytest
from hypothesis import strategies as st

from scottdcpo.poset import FinitePoset, antichain, chain, from_cover_relation


def diamond() -> FinitePoset:
    return from_cover_relation(["bot", "x", "y", "top"], [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])


def two_below_chain() -> FinitePoset:
    """{a,b} < c < d with a, b incomparable."""
    return from_cover_relation(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("c", "d")])


@pytest.fixture
def dia():
    return diamond()


@pytest.fixture
def c2():
    return chain(2)


@pytest.fixture
def a2():
    return antichain(2)


@st.composite
def posets(draw, max_n: int = 6, min_n: int = 1):
    """Random upper-triangular relation, transitively closed, then shuffled."""
    n = draw(st.integers(min_n, max_n))
    leq = [[i == j for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j):
            leq[i][j] = draw(st.booleans())
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    perm = draw(st.permutations(range(n)))
    shuffled = [[leq[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    return FinitePoset.from_matrix([f"p{i}" for i in range(n)], shuffled)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LOG: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LOG, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
