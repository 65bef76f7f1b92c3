import pytest

from amalgadim import families as fam
from amalgadim.errors import BadParams, TooSmall
from amalgadim.graph import distance_matrix, is_connected
from amalgadim.resolver import exact_metric_dimension, is_resolving

from .conftest import oracle_bases, oracle_dim


def _label_set(g, W):
    return {g.label(v) for v in W}


def test_path_conventions():
    p2 = fam.path(2)
    assert p2.graph.edges == [(0, 1)] and p2.default_terminal_vertex == 1
    p5 = fam.path(5)
    assert p5.default_terminal_vertex == 2 and p5.graph.degree(2) == 2


def test_path_dim():
    assert exact_metric_dimension(fam.path(7).graph).dim == 1


def test_cycle():
    c3 = fam.cycle(3)
    assert c3.graph == fam.complete(3).graph
    assert distance_matrix(fam.cycle(4).graph)[0][2] == 2
    # frozen from oracle_dim
    assert exact_metric_dimension(fam.cycle(6).graph).dim == 2 == oracle_dim(fam.cycle(6).graph)


def test_complete():
    assert exact_metric_dimension(fam.complete(5).graph).dim == 4
    assert fam.complete(2).graph == fam.path(2).graph
    assert fam.complete(4).graph.size == 6


def test_complete_bipartite():
    k33 = fam.complete_bipartite(3, 3)
    assert k33.default_terminal_edge == (2, 5)
    assert (k33.graph.label(2), k33.graph.label(5)) == ("x3", "y3")
    assert exact_metric_dimension(k33.graph).dim == 4
    assert exact_metric_dimension(fam.complete_bipartite(2, 2).graph).dim == 2
    star = fam.complete_bipartite(1, 3).graph
    assert sorted(star.degree_sequence()) == [1, 1, 1, 3]


def test_prism():
    p3 = fam.prism(3).graph
    assert (p3.order, p3.size) == (6, 9)
    # frozen from oracle_dim
    assert oracle_dim(p3) == 2
    assert oracle_dim(fam.prism(4).graph) == 3
    assert exact_metric_dimension(p3).dim == 2
    assert exact_metric_dimension(fam.prism(4).graph).dim == 3


def test_dhc_structure():
    d7 = fam.double_hats_cycle(7)
    g = d7.graph
    assert (g.order, g.size) == (9, 13)
    assert d7.default_terminal_edge == (5, 6)
    assert (g.label(5), g.label(6)) == ("x6", "x7")
    y2, y5 = fam.vertex_by_label(g, "y2"), fam.vertex_by_label(g, "y5")
    assert g.neighbors(y2) == (0, 1, 2) and g.neighbors(y5) == (3, 4, 5)


def test_dhc8_dim_and_x2_y5():
    g = fam.double_hats_cycle(8).graph
    assert exact_metric_dimension(g).dim == 2
    assert is_resolving(distance_matrix(g), [1, 9])


def test_dhc7_has_no_two_element_resolving_set():
    # oracle: no resolving 2-subset; dimension is 3
    g = fam.double_hats_cycle(7).graph
    assert oracle_bases(g, 2) == []
    assert exact_metric_dimension(g).dim == 3


@pytest.mark.parametrize("n", [8, 9, 10])
def test_dhc_minimum_bases(n):
    # Oracle: the 2-element bases pair one of {x2, y2} with one of {x5, y5};
    # {x2, x5} is itself a basis.
    g = fam.double_hats_cycle(n).graph
    bases = {frozenset(g.label(v) for v in W) for W in oracle_bases(g, 2)}
    expected = {frozenset(p) for p in [("x2", "x5"), ("x2", "y5"), ("y2", "x5"), ("y2", "y5")]}
    assert bases == expected


@pytest.mark.parametrize("inst", [
    fam.path(2), fam.path(6), fam.cycle(3), fam.cycle(9), fam.complete(2), fam.complete(7),
    fam.complete_bipartite(1, 1), fam.complete_bipartite(2, 5), fam.prism(3), fam.prism(6),
    fam.double_hats_cycle(7), fam.double_hats_cycle(11),
], ids=lambda i: i.name)
def test_generator_invariants(inst):
    g = inst.graph
    assert is_connected(g)
    assert 0 <= inst.default_terminal_vertex < g.order
    assert g.has_edge(*inst.default_terminal_edge)
    for v in range(g.order):
        assert list(g.adjacency[v]) == sorted(set(g.adjacency[v]))
        assert v not in g.adjacency[v]
        for w in g.adjacency[v]:
            assert v in g.adjacency[w]


@pytest.mark.parametrize("n", range(3, 8))
def test_size_formulas(n):
    assert (fam.prism(n).graph.order, fam.prism(n).graph.size) == (2 * n, 3 * n)
    d = fam.double_hats_cycle(n + 4).graph
    assert (d.order, d.size) == (n + 6, n + 10)
    assert fam.complete_bipartite(n, n - 1).graph.size == n * (n - 1)


@pytest.mark.parametrize("fn, bad", [
    (fam.path, 1), (fam.cycle, 2), (fam.complete, 1), (fam.prism, 2), (fam.double_hats_cycle, 6),
])
def test_too_small(fn, bad):
    with pytest.raises(TooSmall):
        fn(bad)


def test_build_dispatch():
    assert fam.build("complete_bipartite", [2, 3]).graph == fam.complete_bipartite(2, 3).graph
    with pytest.raises(BadParams):
        fam.build("cycle", [3, 4])
    with pytest.raises(KeyError):
        fam.build("wheel", [5])
