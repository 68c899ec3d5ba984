import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from patternclass.graph import UndirectedGraph, all_labeled_graphs
from patternclass.io import small_graphs
from patternclass.patterns import PairState, Pattern, pairs_of

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled by tests/test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_orderings(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n, max_n))
    return g, draw(st.permutations(range(g.n)))


@st.composite
def patterns(draw, min_k=2, max_k=5):
    k = draw(st.integers(min_k, max_k))
    states = draw(st.lists(st.sampled_from(list(PairState)), min_size=len(pairs_of(k)), max_size=len(pairs_of(k))))
    return Pattern(k, tuple(states))


def labeled_upto(n_max):
    for n in range(n_max + 1):
        yield from all_labeled_graphs(n)


@pytest.fixture(scope="session")
def corpus6():
    return small_graphs(max_n=6)


@pytest.fixture(scope="session")
def corpus7():
    return small_graphs(max_n=7)
