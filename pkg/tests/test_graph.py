import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import small_graphs, to_nx
from pathcolor.constructs import build_gd, complete_bipartite, complete_graph, cycle_graph, path_graph, random_two_connected
from pathcolor.errors import PreconditionError
from pathcolor.graph import (
    EdgeColoring,
    Graph,
    articulation_points,
    bipartition,
    cycle_lengths,
    edge_connectivity,
    girth,
    is_connected,
    is_minimally_two_connected,
    is_two_connected,
    minimally_two_connected_spanning,
    shortest_path,
    vertex_connectivity,
)


def two_triangles_sharing_vertex():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def test_edges_are_normalized_and_indexed():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == ((0, 2), (1, 2))
    assert g.edge_id(0, 2) == g.edge_id(2, 0) == 0
    assert g.neighbors(2) == ((0, 0), (1, 1))
    assert g.check_adjacency()


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(ValueError):
        Graph.from_edges(3, edges)


def test_connected_examples():
    assert not is_connected(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    assert is_connected(cycle_graph(5))
    assert is_connected(Graph(1, ()))


def test_two_connected_examples():
    assert is_two_connected(cycle_graph(5))
    assert not is_two_connected(path_graph(4))
    assert not is_two_connected(two_triangles_sharing_vertex())
    assert articulation_points(two_triangles_sharing_vertex()) == {2}
    assert not is_two_connected(path_graph(2))


def test_connectivity_examples():
    assert vertex_connectivity(complete_graph(4)) == 3
    assert vertex_connectivity(cycle_graph(6)) == 2
    assert edge_connectivity(complete_graph(5)) == 4
    assert edge_connectivity(cycle_graph(8)) == 2
    gd = build_gd(a=3, b=3)
    assert vertex_connectivity(gd) == 2
    assert edge_connectivity(gd) == 2
    assert vertex_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0


def test_minimal_spanning_examples():
    h = minimally_two_connected_spanning(complete_graph(4))
    assert h.m == 4 and sorted(h.degree(v) for v in range(4)) == [2, 2, 2, 2]
    assert minimally_two_connected_spanning(cycle_graph(7)) == cycle_graph(7)
    k23 = complete_bipartite(2, 3)
    assert minimally_two_connected_spanning(k23) == k23
    assert all(not is_two_connected(k23.without_edge(e)) for e in range(k23.m))
    with pytest.raises(PreconditionError):
        minimally_two_connected_spanning(path_graph(4))


def test_k4_minimal_subgraphs_are_all_four_cycles():
    # exhaustive: every minimally 2-connected spanning subgraph of K4 is a 4-cycle
    k4 = complete_graph(4)
    found = []
    for r in range(3, 7):
        for sub in itertools.combinations(range(6), r):
            h = k4.edge_subgraph(sub)
            if is_minimally_two_connected(h):
                found.append(h)
    assert found and all(h.m == 4 and nx.is_isomorphic(to_nx(h), nx.cycle_graph(4)) for h in found)


def test_girth_examples():
    assert girth(cycle_graph(9)) == 9
    assert girth(complete_graph(4)) == 3
    assert girth(build_gd(a=3, b=3)) == 19
    assert girth(path_graph(5)) is None


def test_edge_coloring_basics():
    g = cycle_graph(4)
    c = EdgeColoring.from_mapping(g, {0: 1, 1: 2, 2: 1, 3: 2})
    assert c.k == 2 and c.used == 2 and c.covers(g)
    assert c.sequence(g, [0, 1, 2]) == (1, 2)
    with pytest.raises(ValueError):
        EdgeColoring((1, 3), 2)
    with pytest.raises(ValueError):
        EdgeColoring.from_mapping(g, {0: 1})


def test_shortest_path_and_bipartition():
    g = cycle_graph(6)
    assert shortest_path(g, 0, 3) in ([0, 1, 2, 3], [0, 5, 4, 3])
    assert bipartition(g) is not None
    assert bipartition(cycle_graph(5)) is None


@given(small_graphs())
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    if nx.is_connected(h):
        assert vertex_connectivity(g) == nx.node_connectivity(h)
        assert edge_connectivity(g) == nx.edge_connectivity(h)
    assert articulation_points(g) == set(nx.articulation_points(h))
    assert is_two_connected(g) == (g.n >= 3 and nx.is_biconnected(h))


@given(small_graphs())
def test_girth_and_cycles_match_networkx(g):
    h = to_nx(g)
    cycles = [len(c) for c in nx.simple_cycles(h)]
    assert girth(g) == (min(cycles) if cycles else None)
    assert sorted(cycle_lengths(g)) == sorted(cycles)


@given(small_graphs(min_n=3))
def test_two_connected_iff_kappa_at_least_two(g):
    if is_connected(g):
        assert is_two_connected(g) == (vertex_connectivity(g) >= 2)


@given(st.integers(3, 14), st.integers(0, 12), st.integers(0, 10_000))
def test_whitney_inequalities_and_minimality(n, extra, seed):
    extra = min(extra, n * (n - 1) // 2 - n)
    g = random_two_connected(n, extra, seed)
    assert vertex_connectivity(g) <= edge_connectivity(g) <= min(g.degree(v) for v in range(g.n))
    h = minimally_two_connected_spanning(g)
    assert is_two_connected(h)
    assert all(not is_two_connected(h.without_edge(e)) for e in range(h.m))
    assert set(h.edges) <= set(g.edges) and h.n == g.n
