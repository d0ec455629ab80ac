import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lions.errors import ContainmentError, InvalidParameterError, InvalidSetError
from lions.graph import (Graph, add_universal_vertex, boundary, complete, complete_binary_tree,
                         components, cycle_graph, induced_subgraph, is_isometric_subgraph,
                         neighborhood, path_graph, shortest_path, star)

from conftest import connected_graphs, nx_graph, trees

P3 = path_graph(3)  # a=0, b=1, c=2
STAR = star(3)      # c=0, leaves 1..3


def test_neighborhood_examples():
    assert neighborhood(P3, {1}) == {0, 2}
    assert neighborhood(P3, {0, 1, 2}) == set()
    assert neighborhood(STAR, {1, 2}) == {0}


def test_boundary_examples():
    assert boundary(path_graph(4), {0, 1}) == {1}
    assert boundary(STAR, range(4)) == set()
    assert boundary(STAR, {0}) == {0}


def test_components_examples():
    assert components(P3, {0, 2}) == [{0}, {2}]
    assert components(P3, set()) == []
    assert components(STAR, {1, 2, 3}) == [{1}, {2}, {3}]


def test_out_of_range_rejected():
    with pytest.raises(InvalidSetError):
        neighborhood(P3, {3})
    with pytest.raises(InvalidSetError):
        boundary(P3, {-1})


def test_constructors():
    t = complete_binary_tree(1)
    assert (t.n, t.m) == (3, 2)
    assert add_universal_vertex(path_graph(2)) == complete(3)
    assert complete(4).m == 6
    for h in range(6):
        assert complete_binary_tree(h).n == 2 ** (h + 1) - 1
    for bad in (lambda: path_graph(0), lambda: star(0), lambda: complete(0),
                lambda: complete_binary_tree(-1)):
        with pytest.raises(InvalidParameterError):
            bad()


def test_graph_rejects_loops_and_multi_edges():
    with pytest.raises(InvalidParameterError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidParameterError):
        Graph.from_edges(2, [(0, 1), (1, 0)])


def test_isometric_examples():
    c4 = cycle_graph(4)
    assert is_isometric_subgraph(c4, {0, 1, 2}, [(0, 1), (1, 2)])
    assert not is_isometric_subgraph(c4, {0, 1, 2, 3}, [(0, 1), (1, 2), (2, 3)])
    assert is_isometric_subgraph(c4, range(4), c4.edges)
    with pytest.raises(ContainmentError):
        is_isometric_subgraph(c4, {0, 2}, [(0, 2)])


@given(connected_graphs(), st.data())
def test_set_calculus_laws(g, data):
    s = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    nb, bd = neighborhood(g, s), boundary(g, s)
    assert not nb & s
    assert bd <= s
    assert all(g.adjacency[v] & nb for v in bd)
    parts = components(g, s)
    assert frozenset().union(*parts) == s if parts else not s
    assert sum(len(p) for p in parts) == len(s)
    assert sorted(map(sorted, parts)) == sorted(map(sorted, nx.connected_components(nx_graph(g).subgraph(s))))


@given(trees(min_n=2), st.data())
def test_induced_subtree_is_isometric(t, data):
    root = data.draw(st.integers(0, t.n - 1))
    keep = data.draw(st.integers(1, t.n))
    order = list(nx.bfs_tree(nx_graph(t), root))[:keep]
    h, old = induced_subgraph(t, order)
    assert is_isometric_subgraph(t, order, [(old[a], old[b]) for a, b in h.edges])


@given(connected_graphs(min_n=2))
def test_shortest_path_length(g):
    dist = nx.single_source_shortest_path_length(nx_graph(g), 0)
    for v in range(g.n):
        p = shortest_path(g, 0, v)
        assert p[0] == 0 and p[-1] == v and len(p) - 1 == dist[v]
        assert all(b in g.adjacency[a] for a, b in zip(p, p[1:]))
