import numpy as np
import pytest
from hypothesis import strategies as st

from hyperspec import hypergraph as hg
from hyperspec.verify import graph_corpus, hypergraph_corpus


@pytest.fixture(scope="session")
def corpus():
    return hypergraph_corpus()


@pytest.fixture(scope="session")
def graphs():
    return graph_corpus()


@st.composite
def hypergraphs(draw, max_n=6, max_k=4, min_edges=0, max_edges=6):
    """Random small uniform hypergraphs (possibly disconnected)."""
    k = draw(st.integers(2, max_k))
    n = draw(st.integers(k, max_n))
    subsets = st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True).map(lambda e: tuple(sorted(e)))
    edges = draw(st.lists(subsets, min_size=min_edges, max_size=max_edges, unique=True))
    return hg.build_hypergraph(n, k, edges)


def graph_matrix(G):
    A = np.zeros((G.n, G.n))
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1.0
    return A


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name} -- {detail}")
