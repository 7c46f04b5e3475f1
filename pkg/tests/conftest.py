import itertools

import pytest
from hypothesis import strategies as st

from permsquares import Permutation


def perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@st.composite
def permutations_st(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


@pytest.fixture(scope="session")
def s7():
    return perms(7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
