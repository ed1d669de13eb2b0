"""Property-constrained path search and P-connectedness checks.

Searches run a DFS over simple paths and drop a branch as soon as its
color sequence stops being valid; this is exact for properties closed
under taking blocks (hence prefixes). Built-in properties run in compiled
kernels, custom ones in plain Python.
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import EdgeColoring, Graph
from .words import STRONG, SequenceProperty

__all__ = [
    "Witness",
    "WitnessCertificate",
    "WitnessCheck",
    "VerificationResult",
    "exists_valid_path",
    "exists_valid_path_bruteforce",
    "strong_walk_reachable",
    "verify_connected_coloring",
    "verify_witness_set",
    "count_failing_pairs",
    "exact_connection_number",
    "exact_connection_coloring",
    "is_p_connected",
    "stochastic_search",
    "DEFAULT_EDGE_CAP",
]

DEFAULT_EDGE_CAP = 14


@dataclass(frozen=True)
class Witness:
    path: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass
class WitnessCertificate:
    """One certifying path per vertex pair, keyed by ``(u, v)``."""

    entries: dict[tuple[int, int], Witness] = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, pair):
        return self.entries[pair]

    def __iter__(self):
        return iter(self.entries.items())

    def add(self, u, v, path, colors):
        self.entries[(u, v)] = Witness(tuple(path), tuple(colors))


@dataclass
class VerificationResult:
    connected: bool
    witnesses: WitnessCertificate
    failing_pairs: list[tuple[int, int]]

    def __bool__(self):
        return self.connected


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    problem: str = ""
    pair: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


def _csr(g: Graph):
    start = np.zeros(g.n + 1, np.int64)
    nbr = np.empty(2 * g.m, np.int64)
    eid = np.empty(2 * g.m, np.int64)
    k = 0
    for v in range(g.n):
        start[v] = k
        for w, e in g.neighbors(v):
            nbr[k] = w
            eid[k] = e
            k += 1
    start[g.n] = k
    return start, nbr, eid


def _colors_array(c: EdgeColoring) -> np.ndarray:
    return np.asarray(c.colors, dtype=np.int64)


def _python_search(g: Graph, colors: Sequence[int], p: SequenceProperty, src: int, targets: set[int]):
    """Generic DFS; returns {vertex: first valid path found}."""
    found: dict[int, tuple[int, ...]] = {}
    remaining = set(targets)
    if not remaining:
        return found
    path = [src]
    seq: list[int] = []
    on_path = {src}
    stack = [iter(g.neighbors(src))]
    while stack:
        for w, e in stack[-1]:
            if w in on_path:
                continue
            seq.append(colors[e])
            if not p.extends(seq):
                seq.pop()
                continue
            path.append(w)
            on_path.add(w)
            if w not in found:
                found[w] = tuple(path)
                remaining.discard(w)
                if not remaining:
                    return found
            stack.append(iter(g.neighbors(w)))
            break
        else:
            stack.pop()
            on_path.discard(path.pop())
            if seq:
                seq.pop()
    return found


def strong_walk_reachable(g: Graph, c: EdgeColoring, u: int) -> set[int]:
    """Vertices reachable from u by a strongly proper walk.

    A walk state is (vertex, last color, color before it). Necessary
    condition only: a valid walk need not contain a valid simple path.
    """
    start = (u, 0, 0)
    seen = {start}
    q = deque([start])
    out = {u}
    while q:
        v, c1, c2 = q.popleft()
        for w, e in g.neighbors(v):
            col = c.colors[e]
            if col == c1 or col == c2:
                continue
            state = (w, col, c1)
            if state not in seen:
                seen.add(state)
                out.add(w)
                q.append(state)
    return out


def exists_valid_path(g: Graph, c: EdgeColoring, u: int, v: int, p: SequenceProperty):
    """A simple u-v path whose color sequence satisfies p, or None."""
    if u == v:
        raise ValueError("endpoints must differ")
    if not c.covers(g):
        raise ValueError("coloring does not cover the graph")
    if p is STRONG and v not in strong_walk_reachable(g, c, u):
        return None
    if p.code >= 0:
        start, nbr, eid = _csr(g)
        targets = np.zeros(g.n, np.bool_)
        targets[v] = True
        reached = np.zeros(g.n, np.bool_)
        reached[u] = True
        paths = np.zeros((g.n, g.n), np.int64)
        plen = np.zeros(g.n, np.int64)
        _kernels.search_from(g.n, start, nbr, eid, _colors_array(c), p.code, u, targets, reached, paths, plen, True)
        return [int(x) for x in paths[v, : plen[v]]] if reached[v] else None
    found = _python_search(g, c.colors, p, u, {v})
    return list(found[v]) if v in found else None


def exists_valid_path_bruteforce(g: Graph, c: EdgeColoring, u: int, v: int, p: SequenceProperty):
    """Unpruned enumeration of all simple u-v paths (reference oracle)."""
    def walk(path):
        x = path[-1]
        if x == v:
            if p.is_valid(c.sequence(g, path)):
                return list(path)
            return None
        for w, _ in g.neighbors(x):
            if w not in path:
                hit = walk(path + [w])
                if hit is not None:
                    return hit
        return None

    return walk([u])


def verify_connected_coloring(g: Graph, c: EdgeColoring, p: SequenceProperty) -> VerificationResult:
    """Check every unordered pair {u, v} (u < v, paths read from u)."""
    if not c.covers(g):
        raise ValueError("coloring does not cover the graph")
    cert = WitnessCertificate()
    failing = []
    if p.code >= 0:
        start, nbr, eid = _csr(g)
        cols = _colors_array(c)
        paths = np.zeros((g.n, g.n), np.int64)
        plen = np.zeros(g.n, np.int64)
        for u in range(g.n - 1):
            targets = np.zeros(g.n, np.bool_)
            targets[u + 1 :] = True
            reached = np.zeros(g.n, np.bool_)
            reached[u] = True
            _kernels.search_from(g.n, start, nbr, eid, cols, p.code, u, targets, reached, paths, plen, True)
            for v in range(u + 1, g.n):
                if reached[v]:
                    path = [int(x) for x in paths[v, : plen[v]]]
                    cert.add(u, v, path, c.sequence(g, path))
                else:
                    failing.append((u, v))
    else:
        for u in range(g.n - 1):
            found = _python_search(g, c.colors, p, u, set(range(u + 1, g.n)))
            for v in range(u + 1, g.n):
                if v in found:
                    cert.add(u, v, found[v], c.sequence(g, found[v]))
                else:
                    failing.append((u, v))
    return VerificationResult(not failing, cert, failing)


def count_failing_pairs(g: Graph, c: EdgeColoring | Sequence[int], p: SequenceProperty) -> int:
    colors = c.colors if isinstance(c, EdgeColoring) else tuple(c)
    if p.code >= 0:
        start, nbr, eid = _csr(g)
        return int(_kernels.failing_pairs(g.n, start, nbr, eid, np.asarray(colors, np.int64), p.code, g.n * g.n))
    bad = 0
    for u in range(g.n - 1):
        targets = set(range(u + 1, g.n))
        bad += len(targets - _python_search(g, colors, p, u, targets).keys())
    return bad


def is_p_connected(g: Graph, c: EdgeColoring, p: SequenceProperty) -> bool:
    return count_failing_pairs(g, c, p) == 0


def verify_witness_set(g: Graph, c: EdgeColoring, w: WitnessCertificate, p: SequenceProperty, ordered: bool = True) -> WitnessCheck:
    """Every pair has a simple path in g matching c and satisfying p.

    With ``ordered`` all n(n-1) ordered pairs must be present, else the
    n(n-1)/2 pairs u < v.
    """
    for u in range(g.n):
        for v in range(g.n):
            if u == v or (not ordered and u > v):
                continue
            if (u, v) not in w.entries:
                return WitnessCheck(False, "missing pair", (u, v))
    for (u, v), wit in w:
        path = wit.path
        if not path or path[0] != u or path[-1] != v:
            return WitnessCheck(False, "wrong endpoints", (u, v))
        if len(set(path)) != len(path):
            return WitnessCheck(False, "repeated vertex", (u, v))
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return WitnessCheck(False, f"non-edge ({a}, {b})", (u, v))
        if tuple(wit.colors) != c.sequence(g, path):
            return WitnessCheck(False, "recorded colors disagree with coloring", (u, v))
        if not p.is_valid(wit.colors):
            return WitnessCheck(False, "color sequence violates property", (u, v))
    return WitnessCheck(True)


def exact_connection_number(g: Graph, p: SequenceProperty, kmax: int, cap: int = DEFAULT_EDGE_CAP):
    """Least k <= kmax with a p-connected k-coloring, or None.

    Colorings are enumerated as restricted-growth strings over edge-id
    order, so each partition of the edges into color classes is visited
    once.
    """
    return exact_connection_coloring(g, p, kmax, cap)[0]


def exact_connection_coloring(g: Graph, p: SequenceProperty, kmax: int, cap: int = DEFAULT_EDGE_CAP):
    """Like :func:`exact_connection_number` but also returns a witness coloring."""
    if g.m > cap:
        raise ValueError(f"graph has {g.m} edges; exhaustive search is capped at {cap}")
    if g.n == 1:
        return 0, EdgeColoring((), 1)
    if g.m == 0:
        return None, None
    start, nbr, eid = _csr(g)
    for k in range(1, min(kmax, g.m) + 1):
        if p.code >= 0:
            colors = np.zeros(g.m, np.int64)
            if _kernels.exact_search(g.n, start, nbr, eid, g.m, k, p.code, colors):
                return k, EdgeColoring(tuple(int(x) for x in colors), k)
        else:
            for cols in _rgs(g.m, k):
                if count_failing_pairs(g, cols, p) == 0:
                    return k, EdgeColoring(cols, k)
    return None, None


def _rgs(m: int, k: int):
    """Restricted-growth strings of length m using exactly colors 1..k."""
    def rec(prefix, top):
        i = len(prefix)
        if i == m:
            if top == k:
                yield tuple(prefix)
            return
        if k - top > m - i:
            return
        for col in range(1, min(top + 1, k) + 1):
            prefix.append(col)
            yield from rec(prefix, max(top, col))
            prefix.pop()

    yield from rec([], 0)


def stochastic_search(
    g: Graph,
    p: SequenceProperty,
    k: int,
    budget: int,
    seed: int = 0,
    t_start: float = 2.0,
    t_end: float = 0.05,
) -> EdgeColoring | None:
    """Simulated annealing for a p-connected k-coloring.

    Move: recolor one random edge; energy: number of failing pairs;
    geometric cooling from ``t_start`` to ``t_end`` over ``budget`` moves.
    A None result is evidence only, never a proof of non-existence.
    """
    if g.m == 0:
        return None
    if p.code >= 0:
        start, nbr, eid = _csr(g)
        colors = np.zeros(g.m, np.int64)
        energy = _kernels.anneal(g.n, start, nbr, eid, g.m, k, p.code, budget, seed, t_start, t_end, colors)
        cols = tuple(int(x) for x in colors)
    else:
        energy, cols = _anneal_python(g, p, k, budget, seed, t_start, t_end)
    if energy != 0:
        return None
    coloring = EdgeColoring(cols, k)
    return coloring if verify_connected_coloring(g, coloring, p).connected else None


def _anneal_python(g, p, k, budget, seed, t_start, t_end):
    rng = random.Random(seed)
    cols = [rng.randint(1, k) for _ in range(g.m)]
    energy = count_failing_pairs(g, cols, p)
    if k < 2:
        return energy, tuple(cols)
    ratio = t_end / t_start
    for step in range(budget):
        if energy == 0:
            break
        e = rng.randrange(g.m)
        old = cols[e]
        new = rng.randint(1, k - 1)
        cols[e] = new + 1 if new >= old else new
        temp = t_start * ratio ** (step / budget)
        cand = count_failing_pairs(g, cols, p)
        if cand <= energy or rng.random() < math.exp(-(cand - energy) / temp):
            energy = cand
        else:
            cols[e] = old
    return energy, tuple(cols)
