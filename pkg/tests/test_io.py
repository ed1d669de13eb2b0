import pytest
from hypothesis import given, strategies as st

from conftest import small_graphs
from pathcolor.constructs import build_gd, complete_graph, cycle_graph, random_two_connected
from pathcolor.errors import MalformedInputError
from pathcolor.graph import EdgeColoring
from pathcolor.io import (
    format_coloring,
    format_graph,
    format_witnesses,
    looks_like_coloring,
    parse_coloring,
    parse_graph,
    parse_witnesses,
    to_dot,
)
from pathcolor.trees import two_tree_color, witness_certificate
from pathcolor.words import NONREP


def test_graph_text_layout():
    text = format_graph(cycle_graph(3), ["triangle"])
    assert text == "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"


def test_labels_survive_round_trip():
    g = build_gd(a=3, b=3)
    back = parse_graph(format_graph(g))
    assert back == g and back.labels == g.labels


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",
        "p edge 2 1\n",
        "p edge 2 1\ne 1 3\n",
        "p edge 2 1\ne 1 1\n",
        "p edge 3 2\ne 1 2\ne 2 1\n",
        "p edge 2 1\ne 1 x\n",
        "p edge 2 1\nq 1 2\n",
        "p col 2 1\ne 1 2\n",
        "",
    ],
)
def test_malformed_graphs(text):
    with pytest.raises(MalformedInputError):
        parse_graph(text)


def test_coloring_with_companion_graph():
    g = cycle_graph(4)
    c = EdgeColoring((1, 2, 1, 2), 2)
    text = format_coloring(g, c, "proper")
    assert looks_like_coloring(text) and not looks_like_coloring(format_graph(g))
    g2, c2, prop = parse_coloring(text, g)
    assert (g2, c2, prop) == (g, c, "proper")
    # reordered lines map back onto edge ids
    lines = text.splitlines()
    shuffled = "\n".join(lines[:2] + lines[2:][::-1])
    assert parse_coloring(shuffled, g)[1] == c


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2 1\n",
        "k 2 property strong\ne 1 2 3\ne 2 3 1\ne 3 4 1\ne 1 4 1\n",
        "k 2 property strong\ne 1 2 1\n",
        "k 2 property strong\ne 1 3 1\ne 2 3 1\ne 3 4 1\ne 1 4 1\n",
        "k 2 property strong\ne 1 2 1\ne 1 2 1\ne 3 4 1\ne 1 4 1\n",
        "k two property strong\n",
    ],
)
def test_malformed_colorings(text):
    with pytest.raises(MalformedInputError):
        parse_coloring(text, cycle_graph(4))


def test_witness_round_trip():
    g = complete_graph(5)
    c, pair = two_tree_color(g, NONREP)
    w = witness_certificate(g, c, pair)
    assert parse_witnesses(format_witnesses(w)).entries == w.entries
    with pytest.raises(MalformedInputError):
        parse_witnesses("w 1 2 : 1 2\n")


def test_dot_output():
    g = cycle_graph(3)
    plain = to_dot(g)
    assert plain.startswith("graph G {") and "1 -- 2;" in plain
    colored = to_dot(g, EdgeColoring((1, 2, 3), 3))
    assert 'label="2", color="blue"' in colored


@given(small_graphs())
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@given(st.integers(3, 20), st.integers(0, 10), st.integers(0, 999), st.integers(1, 6))
def test_coloring_round_trip(n, extra, seed, k):
    extra = min(extra, n * (n - 1) // 2 - n)
    g = random_two_connected(n, extra, seed)
    c = EdgeColoring(tuple((e * 7 + seed) % k + 1 for e in range(g.m)), k)
    text = format_coloring(g, c, "strong")
    assert parse_coloring(text, g)[1] == c
    g2, c2, _ = parse_coloring(text)
    assert g2 == g and c2 == c
