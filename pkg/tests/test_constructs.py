import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import to_nx
from pathcolor.constructs import (
    GdParameters,
    build_gd,
    build_mod3,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    octahedron,
    random_k_edge_connected,
    random_min_two_connected,
    random_two_connected,
    theta_graph,
)
from pathcolor.ears import longest_first_ear_decomposition
from pathcolor.graph import (
    bipartition,
    cycle_lengths,
    edge_connectivity,
    girth,
    is_minimally_two_connected,
    is_two_connected,
    vertex_connectivity,
)


def test_gd_counts_and_girth():
    g = build_gd(a=3, b=3)
    assert (g.n, g.m) == (57, 60)
    assert girth(g) == (3 * 3 + 1) + 3 * 3
    assert is_two_connected(g) and vertex_connectivity(g) == 2
    assert set(g.labels) == {"x1", "w1", "x2", "w2", "x3", "w3"}
    for i in (1, 2, 3):
        assert g.has_edge(g.labels[f"x{i}"], g.labels[f"w{i}"])


@pytest.mark.parametrize("a,b", [(3, 3), (4, 3), (3, 5), (5, 4)])
def test_gd_counts_formula(a, b):
    g = build_gd(a=a, b=b)
    assert g.n == 6 + 3 * (3 * a) + 3 * (3 * b - 1)
    assert g.m == 3 + 3 * (3 * a + 1) + 3 * 3 * b


def test_gd_parameter_bounds():
    with pytest.raises(ValueError):
        GdParameters(2, 3, 3)
    with pytest.raises(ValueError):
        GdParameters(3, 3, 12)  # needs a, b >= 4
    assert build_gd(GdParameters(4, 4, 12)).n > 0


def test_gd_two_cut_is_exhibited():
    g = build_gd(a=3, b=3)
    h = to_nx(g)
    cut = next(
        (u, v) for u, v in itertools.combinations(range(g.n), 2)
        if not nx.is_connected(h.subgraph(set(range(g.n)) - {u, v}))
    )
    assert len(cut) == 2


def test_gd_bipartite_scan():
    # a bipartite member exists once a + b is odd and a is even
    found = []
    for a, b in itertools.product(range(3, 7), repeat=2):
        g = build_gd(a=a, b=b)
        if bipartition(g) is not None:
            found.append((a, b))
            assert nx.is_bipartite(to_nx(g))
    assert (4, 3) in found
    assert (3, 3) not in found


def test_mod3_k4_unit_factors():
    g = build_mod3(complete_graph(4), [1] * 6)
    assert (g.n, g.m) == (16, 18)
    assert set(cycle_lengths(g)) == {9, 12}


def test_mod3_c4_is_c12():
    g = build_mod3(cycle_graph(4), [1] * 4)
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(12))


def test_mod3_multigraph_base_and_errors():
    g = build_mod3((2, [(0, 1), (0, 1), (0, 1)]), [1, 1, 2])
    assert set(cycle_lengths(g)) == {6, 9}
    with pytest.raises(ValueError):
        build_mod3(cycle_graph(3), [1, 0, 1])
    with pytest.raises(ValueError):
        build_mod3(cycle_graph(3), [1, 1])


@given(st.sampled_from(["k4", "c5", "k23", "theta"]), st.integers(0, 1000))
def test_mod3_cycles_divisible_by_three(base, seed):
    graphs = {"k4": complete_graph(4), "c5": cycle_graph(5), "k23": complete_bipartite(2, 3), "theta": theta_graph(3, 2)}
    g = build_mod3(graphs[base], seed=seed)
    if g.n <= 40:
        assert all(length % 3 == 0 for length in cycle_lengths(g))


def test_random_two_connected_examples():
    assert random_two_connected(3, 0).m == 3
    assert is_two_connected(random_two_connected(20, 10, seed=7))
    with pytest.raises(ValueError):
        random_two_connected(5, 11)


def test_random_min_two_connected_examples():
    tri = random_min_two_connected(3, 0)
    assert (tri.n, tri.m) == (3, 3)
    assert is_minimally_two_connected(random_min_two_connected(12, 6, seed=3))
    ed = longest_first_ear_decomposition(random_min_two_connected(20, 10, seed=7))
    assert all(len(e.internal) >= 1 for e in ed.ears)


def test_generators_are_deterministic():
    assert random_two_connected(15, 8, 4).edges == random_two_connected(15, 8, 4).edges
    assert build_mod3(complete_graph(4), seed=9).edges == build_mod3(complete_graph(4), seed=9).edges
    assert random_k_edge_connected(12, 4, 2).edges == random_k_edge_connected(12, 4, 2).edges


@pytest.mark.parametrize("n", [6, 10, 15, 20])
def test_k_edge_connected_generator(n):
    g = random_k_edge_connected(n, 4, seed=n)
    assert edge_connectivity(g) >= 4


def test_octahedron():
    g = octahedron()
    assert nx.is_isomorphic(to_nx(g), nx.complete_multipartite_graph(2, 2, 2))
