"""Simple undirected graphs, edge colorings and connectivity predicates.

Vertices are ``0..n-1`` and edges carry dense ids ``0..m-1`` in insertion
order. All graphs are immutable; derived graphs (subgraphs, deletions)
keep the vertex ids of their parent.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError

__all__ = [
    "Graph",
    "EdgeColoring",
    "is_connected",
    "is_two_connected",
    "articulation_points",
    "vertex_connectivity",
    "edge_connectivity",
    "minimally_two_connected_spanning",
    "is_minimally_two_connected",
    "girth",
    "cycle_lengths",
    "shortest_path",
    "bipartition",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Mapping[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = []
        index = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {eid} = ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise ValueError(f"parallel edge {key}")
            index[key] = eid
            norm.append(key)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        for row in adj:
            row.sort()
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(tuple(r) for r in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> Graph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges), dict(labels or {}))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, sorted ``(neighbor, edge_id)`` pairs."""
        return self._adj

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Graph:
        keep = sorted(set(edge_ids))
        return Graph(self.n, tuple(self.edges[e] for e in keep), dict(self.labels))

    def without_edge(self, eid: int) -> Graph:
        return self.edge_subgraph(e for e in range(self.m) if e != eid)

    def check_adjacency(self) -> bool:
        """Rebuild adjacency from the edge list and compare."""
        rebuilt = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            rebuilt[u].append((v, eid))
            rebuilt[v].append((u, eid))
        return all(sorted(r) == list(a) for r, a in zip(rebuilt, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeColoring:
    """Colors indexed by edge id; ``k`` is the declared palette size."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 1 for c in self.colors):
            raise ValueError("colors must be positive")
        if self.colors and max(self.colors) > self.k:
            raise ValueError(f"color {max(self.colors)} exceeds k={self.k}")

    @classmethod
    def from_mapping(cls, g: Graph, mapping: Mapping[int, int], k: int | None = None):
        missing = [e for e in range(g.m) if e not in mapping]
        if missing:
            raise ValueError(f"edges {missing[:5]} have no color")
        colors = tuple(mapping[e] for e in range(g.m))
        return cls(colors, k if k is not None else max(colors, default=1))

    def __getitem__(self, eid: int) -> int:
        return self.colors[eid]

    def __len__(self):
        return len(self.colors)

    def covers(self, g: Graph) -> bool:
        return len(self.colors) == g.m

    @property
    def used(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))

    def sequence(self, g: Graph, path: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.colors[g.edge_id(a, b)] for a, b in zip(path, path[1:]))


def _components(g: Graph, removed_vertex: int = -1) -> int:
    seen = [False] * g.n
    if removed_vertex >= 0:
        seen[removed_vertex] = True
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def is_connected(g: Graph) -> bool:
    return _components(g) == 1


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices via iterative lowpoint DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent edge id, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            nbrs = g.neighbors(v)
            if i < len(nbrs):
                stack[-1] = (v, pe, i + 1)
                w, eid = nbrs[i]
                if eid == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p == root:
                        root_children += 1
                    elif low[v] >= disc[p]:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    """At least 3 vertices, connected, and no cut vertex.

    K_2 is deliberately not 2-connected.
    """
    if g.n < 3 or not is_connected(g):
        return False
    return not articulation_points(g)


def _max_flow(num_nodes: int, arcs: list[tuple[int, int, int]], s: int, t: int, limit=None) -> int:
    """Integral max flow by BFS augmentation; stops early at ``limit``."""
    cap: list[dict[int, int]] = [dict() for _ in range(num_nodes)]
    for a, b, c in arcs:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)
    flow = 0
    while limit is None or flow < limit:
        parent = {s: None}
        q = deque([s])
        while q and t not in parent:
            x = q.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    q.append(y)
        if t not in parent:
            break
        # unit augmentation is enough: every s-t path here has bottleneck >= 1
        y = t
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    return flow


def _local_vertex_connectivity(g: Graph, s: int, t: int, limit=None) -> int:
    big = g.n
    arcs = []
    for v in range(g.n):
        arcs.append((2 * v, 2 * v + 1, big if v in (s, t) else 1))
    for u, v in g.edges:
        arcs.append((2 * u + 1, 2 * v, big))
        arcs.append((2 * v + 1, 2 * u, big))
    return _max_flow(2 * g.n, arcs, 2 * s + 1, 2 * t, limit)


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that g is k-connected; n-1 for complete graphs, 0 if disconnected."""
    if not is_connected(g):
        return 0
    n = g.n
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            best = min(best, _local_vertex_connectivity(g, s, t, best))
            if best == 0:
                return 0
    return best


def edge_connectivity(g: Graph) -> int:
    """Size of a global minimum edge cut (0 if disconnected or n == 1)."""
    if g.n == 1 or not is_connected(g):
        return 0
    arcs = []
    for u, v in g.edges:
        arcs.append((u, v, 1))
        arcs.append((v, u, 1))
    best = min(g.degree(v) for v in range(g.n))
    for t in range(1, g.n):
        best = min(best, _max_flow(g.n, arcs, 0, t, best))
    return best


def minimally_two_connected_spanning(g: Graph) -> Graph:
    """Drop edges in ascending id order while 2-connectivity survives.

    A single pass suffices: an edge found necessary stays necessary once
    further edges are removed.
    """
    if not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    keep = list(range(g.m))
    for eid in range(g.m):
        trial = [e for e in keep if e != eid]
        if is_two_connected(g.edge_subgraph(trial)):
            keep = trial
    return g.edge_subgraph(keep)


def is_minimally_two_connected(g: Graph) -> bool:
    if not is_two_connected(g):
        return False
    return all(not is_two_connected(g.without_edge(e)) for e in range(g.m))


def girth(g: Graph) -> int | None:
    """Shortest cycle length by BFS from every vertex; None for forests."""
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            v = q.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for w, eid in g.neighbors(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    via[w] = eid
                    q.append(w)
                elif eid != via[v]:
                    length = dist[v] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def cycle_lengths(g: Graph, limit: int = 1_000_000) -> list[int]:
    """Lengths of all cycles, by exhaustive enumeration (small graphs only).

    Each cycle is counted once: it is rooted at its smallest vertex and its
    direction fixed by requiring the second vertex < the last one.
    """
    out = []
    for root in range(g.n):
        on_path = [False] * g.n
        on_path[root] = True
        path = [root]

        def extend(v):
            for w, _ in g.neighbors(v):
                if w < root:
                    continue
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    out.append(len(path))
                    if len(out) > limit:
                        raise RuntimeError("too many cycles to enumerate")
                elif not on_path[w] and w != root:
                    on_path[w] = True
                    path.append(w)
                    extend(w)
                    path.pop()
                    on_path[w] = False

        extend(root)
    return out


def shortest_path(g: Graph, s: int, t: int, allowed_edges=None) -> list[int] | None:
    """BFS vertex path from s to t, optionally restricted to an edge-id set."""
    parent = {s: None}
    q = deque([s])
    while q:
        v = q.popleft()
        if v == t:
            path = [t]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w, eid in g.neighbors(v):
            if w in parent or (allowed_edges is not None and eid not in allowed_edges):
                continue
            parent[w] = v
            q.append(w)
    return None


def bipartition(g: Graph) -> list[int] | None:
    """Proper 2-coloring of the vertices (0/1), or None if an odd cycle exists."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w, _ in g.neighbors(v):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    q.append(w)
                elif side[w] == side[v]:
                    return None
    return side
