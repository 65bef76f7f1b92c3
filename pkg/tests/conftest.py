from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from amalgadim.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def oracle_distances(g: Graph) -> list[list[int]]:
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    return [[lengths[u][v] for v in range(g.order)] for u in range(g.order)]


def oracle_bases(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All resolving k-subsets, by direct enumeration over networkx distances."""
    d = oracle_distances(g)
    out = []
    for W in combinations(range(g.order), k):
        reps = {tuple(d[v][w] for w in W) for v in range(g.order)}
        if len(reps) == g.order:
            out.append(W)
    return out


def oracle_dim(g: Graph) -> int:
    for k in range(1, g.order):
        if oracle_bases(g, k):
            return k
    raise AssertionError("unreachable")


@st.composite
def connected_graphs(draw, min_order=2, max_order=9):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_order, max_order))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    return from_edge_list(n, sorted(edges))


@pytest.fixture(scope="session")
def corpus_graphs():
    from tests.corpus import all_corpus_graphs
    return all_corpus_graphs()


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.VERDICTS):
            terminalreporter.write_line(test_acceptance.VERDICTS[number])
