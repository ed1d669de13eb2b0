"""Graph generators: small named families, the girth lower-bound family,
mod-3 subdivisions and seeded random 2-connected instances."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, edge_connectivity, minimally_two_connected_spanning

__all__ = [
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "complete_bipartite",
    "octahedron",
    "theta_graph",
    "ear_graph",
    "mod3_ear_graph",
    "four_ear_graph",
    "GdParameters",
    "build_gd",
    "build_mod3",
    "random_two_connected",
    "random_min_two_connected",
    "random_k_edge_connected",
]


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def octahedron() -> Graph:
    # K_{2,2,2}: every vertex misses only its antipode
    return Graph.from_edges(6, [(u, v) for u, v in itertools.combinations(range(6), 2) if v - u != 3])


def ear_graph(cycle_len: int, ears: Sequence[tuple[int, int, int]]) -> Graph:
    """Cycle 0..cycle_len-1 plus ears ``(s, k, t)`` with k new internal vertices."""
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    n = cycle_len
    for s, k, t in ears:
        seq = [s, *range(n, n + k), t]
        n += k
        edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(n, edges)


def theta_graph(arms: int = 3, length: int = 3) -> Graph:
    """Two poles (0 and 1) joined by ``arms`` internally disjoint paths."""
    edges = []
    n = 2
    for _ in range(arms):
        seq = [0, *range(n, n + length - 1), 1]
        n += length - 1
        edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(n, edges)


def mod3_ear_graph() -> Graph:
    """12-cycle with ears of 6, 3 and 3 edges; every cycle length is 0 mod 3.

    The last ear ends at an internal vertex of the 6-edge ear.
    """
    return ear_graph(12, [(0, 5, 3), (11, 2, 8), (6, 2, 14)])


def four_ear_graph() -> Graph:
    """10-cycle with ears of 4, 3 and 2 edges (minimally 2-connected)."""
    return ear_graph(10, [(0, 3, 4), (9, 2, 5), (1, 1, 3)])


@dataclass(frozen=True)
class GdParameters:
    a: int = 3
    b: int = 3
    d: int = 3

    def __post_init__(self):
        need = max(3, math.ceil(self.d / 3))
        if self.a < need or self.b < need:
            raise ValueError(f"a and b must be >= max(3, d/3) = {need}; got a={self.a}, b={self.b}")


def build_gd(params: GdParameters | None = None, *, a: int | None = None, b: int | None = None, d: int = 3) -> Graph:
    """Three bridges x_i w_i and six paths: two from w1 to x2, two from w2 to
    x3, two from w3 to x1; in each pair one path has 3a+1 edges, the other 3b.

    Terminals are exported in ``labels`` as x1, w1, x2, w2, x3, w3.
    """
    if params is None:
        params = GdParameters(a if a is not None else 3, b if b is not None else 3, d)
    names = ["x1", "w1", "x2", "w2", "x3", "w3"]
    labels = {name: i for i, name in enumerate(names)}
    edges = [(labels[f"x{i}"], labels[f"w{i}"]) for i in (1, 2, 3)]
    n = 6
    for i in (1, 2, 3):
        start = labels[f"w{i}"]
        end = labels[f"x{i % 3 + 1}"]
        for length in (3 * params.a + 1, 3 * params.b):
            seq = [start, *range(n, n + length - 1), end]
            n += length - 1
            edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(n, edges, labels)


def build_mod3(base, factors=None, seed: int = 0) -> Graph:
    """Subdivide every base edge into a path of 3*factor edges.

    ``base`` is a Graph or an ``(n, edge_list)`` pair; the edge list may
    repeat pairs (a 2-connected multigraph base). Missing factors are drawn
    uniformly from 1..3 with ``seed``.
    """
    if isinstance(base, Graph):
        n0, base_edges = base.n, list(base.edges)
    else:
        n0, base_edges = base[0], [tuple(e) for e in base[1]]
    if factors is None:
        rng = random.Random(seed)
        factors = [rng.randint(1, 3) for _ in base_edges]
    factors = list(factors)
    if len(factors) != len(base_edges):
        raise ValueError("need one factor per base edge")
    if any(f <= 0 for f in factors):
        raise ValueError("subdivision factors must be positive")
    edges = []
    n = n0
    for (u, v), f in zip(base_edges, factors):
        length = 3 * f
        seq = [u, *range(n, n + length - 1), v]
        n += length - 1
        edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(n, edges)


def random_two_connected(n: int, extra_edges: int, seed: int = 0) -> Graph:
    """Random Hamiltonian cycle plus ``extra_edges`` distinct random chords.

    Edge ids: the cycle edges come first, in cycle order, then the chords.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    capacity = n * (n - 1) // 2 - n
    if extra_edges > capacity:
        raise ValueError(f"only {capacity} chords available for n={n}, asked for {extra_edges}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    cycle = [(order[i], order[(i + 1) % n]) for i in range(n)]
    present = {frozenset(e) for e in cycle}
    chords = [p for p in itertools.combinations(range(n), 2) if frozenset(p) not in present]
    return Graph.from_edges(n, cycle + rng.sample(chords, extra_edges))


def random_min_two_connected(n: int, extra_edges: int, seed: int = 0) -> Graph:
    return minimally_two_connected_spanning(random_two_connected(n, extra_edges, seed))


def random_k_edge_connected(n: int, k: int, seed: int = 0, max_tries: int = 200) -> Graph:
    """Random graph with edge connectivity >= k: union of ceil(k/2) random
    Hamiltonian cycles, topped up with random chords until the bound holds."""
    rng = random.Random(seed)
    edges: set[frozenset] = set()
    for _ in range(max(1, (k + 1) // 2)):
        order = list(range(n))
        rng.shuffle(order)
        edges.update(frozenset((order[i], order[(i + 1) % n])) for i in range(n))
    missing = [p for p in itertools.combinations(range(n), 2) if frozenset(p) not in edges]
    rng.shuffle(missing)
    for _ in range(max_tries):
        g = Graph.from_edges(n, sorted(tuple(sorted(e)) for e in edges))
        if edge_connectivity(g) >= k:
            return g
        if not missing:
            break
        edges.add(frozenset(missing.pop()))
    raise ValueError(f"could not reach edge connectivity {k} on {n} vertices")
