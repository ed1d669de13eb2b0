"""Two edge-disjoint spanning trees and the two-tree coloring engine.

Tree packing grows two forests with matroid-union augmentation: an edge
that closes a cycle in forest i may still enter it by pushing a cycle edge
into the other forest, and so on along a shortest exchange sequence. If
no sequence exists the edge is skipped; the final union is maximum, so a
union smaller than 2(n-1) certifies that no tree pair exists.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import PreconditionError, TreePackingError
from .graph import EdgeColoring, Graph, is_connected
from .verify import WitnessCertificate
from .words import SequenceProperty

__all__ = [
    "SpanningTreePair",
    "max_two_forest_union",
    "two_edge_disjoint_spanning_trees",
    "two_tree_color",
    "witness_path",
    "witness_certificate",
]


def _forest_path(g: Graph, forest: set[int], s: int, t: int) -> list[int] | None:
    """Edge ids of the s-t path inside ``forest``, or None if disconnected."""
    if s == t:
        return []
    parent = {s: (None, None)}
    q = deque([s])
    while q:
        v = q.popleft()
        for w, e in g.neighbors(v):
            if e in forest and w not in parent:
                parent[w] = (v, e)
                if w == t:
                    out = []
                    while parent[w][0] is not None:
                        w, e2 = parent[w]
                        out.append(e2)
                    return out[::-1]
                q.append(w)
    return None


def max_two_forest_union(g: Graph) -> tuple[set[int], set[int]]:
    """Two disjoint forests with the largest possible total size."""
    forests: tuple[set[int], set[int]] = (set(), set())
    where = [-1] * g.m  # forest holding each edge, -1 if none
    target = 2 * (g.n - 1)
    for e in range(g.m):
        if len(forests[0]) + len(forests[1]) == target:
            break
        # BFS over (edge) labels; label[y] = (x, i): x enters forest i in place of y
        label = {e: None}
        q = deque([e])
        done = None
        while q and done is None:
            x = q.popleft()
            u, v = g.edges[x]
            for i in (0, 1):
                if where[x] == i:
                    continue
                cycle = _forest_path(g, forests[i], u, v)
                if cycle is None:
                    done = (x, i)
                    break
                for y in cycle:
                    if y not in label:
                        label[y] = (x, i)
                        q.append(y)
        if done is None:
            continue
        x, i = done
        while True:
            prev = where[x]
            if prev >= 0:
                forests[prev].discard(x)
            forests[i].add(x)
            where[x] = i
            if label[x] is None:
                break
            # x left forest `prev`; its predecessor takes that slot
            x, i = label[x][0], prev
    return forests


@dataclass(frozen=True)
class SpanningTreePair:
    t1_edges: frozenset[int]
    t2_edges: frozenset[int]
    root: int
    depth1: tuple[int, ...]
    depth2: tuple[int, ...]
    parent1: tuple[int, ...]  # parent vertex in T1, -1 at the root
    parent2: tuple[int, ...]
    graph: Graph

    def problems(self) -> list[str]:
        out = []
        g = self.graph
        if self.t1_edges & self.t2_edges:
            out.append("trees share edges")
        for name, tree, depth, parent in (
            ("T1", self.t1_edges, self.depth1, self.parent1),
            ("T2", self.t2_edges, self.depth2, self.parent2),
        ):
            if len(tree) != g.n - 1:
                out.append(f"{name} has {len(tree)} edges, expected {g.n - 1}")
            if not is_connected(Graph(g.n, tuple(g.edges[e] for e in sorted(tree)))):
                out.append(f"{name} does not span")
            if depth[self.root] != 0:
                out.append(f"{name} root depth is not 0")
            for v in range(g.n):
                if v == self.root:
                    continue
                if parent[v] < 0:
                    out.append(f"{name} does not reach {v}")
                elif depth[v] != depth[parent[v]] + 1 or not g.has_edge(v, parent[v]) or g.edge_id(v, parent[v]) not in tree:
                    out.append(f"{name} depth/parent inconsistent at {v}")
        return out

    @classmethod
    def from_trees(cls, g: Graph, t1, t2, root: int = 0) -> "SpanningTreePair":
        """Build from two edge-id sets; run :meth:`problems` to validate."""
        d1, p1 = _orient(g, set(t1), root)
        d2, p2 = _orient(g, set(t2), root)
        return cls(frozenset(t1), frozenset(t2), root, d1, d2, p1, p2, g)

    def tree_path_to_root(self, which: int, v: int) -> list[int]:
        parent = self.parent1 if which == 1 else self.parent2
        path = [v]
        while path[-1] != self.root:
            path.append(parent[path[-1]])
        return path

    def height(self, which: int) -> int:
        return max(self.depth1 if which == 1 else self.depth2)


def _orient(g: Graph, tree: set[int], root: int):
    depth = [-1] * g.n
    parent = [-1] * g.n
    depth[root] = 0
    q = deque([root])
    while q:
        v = q.popleft()
        for w, e in g.neighbors(v):
            if e in tree and depth[w] == -1:
                depth[w] = depth[v] + 1
                parent[w] = v
                q.append(w)
    return tuple(depth), tuple(parent)


def two_edge_disjoint_spanning_trees(g: Graph, root: int = 0) -> SpanningTreePair:
    """Raises :class:`TreePackingError` (carrying the maximum union size) if
    g has no two edge-disjoint spanning trees."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    f1, f2 = max_two_forest_union(g)
    required = 2 * (g.n - 1)
    if len(f1) + len(f2) < required:
        raise TreePackingError(len(f1) + len(f2), required, (frozenset(f1), frozenset(f2)))
    return SpanningTreePair.from_trees(g, f1, f2, root)


def two_tree_color(g: Graph, p: SequenceProperty) -> tuple[EdgeColoring, SpanningTreePair]:
    """Color T1 by depth layer with a valid word over 1..m, T2 with one over
    m+1..2m, everything else 1.

    The edge from a vertex at depth i to its parent sits in layer i-1.
    """
    if not p.reversal_closed:
        raise PreconditionError(f"property {p.name!r} is not declared reversal-closed")
    pair = two_edge_disjoint_spanning_trees(g)
    colors = [1] * g.m
    for which, tree, depth, parent, shift in (
        (1, pair.t1_edges, pair.depth1, pair.parent1, 0),
        (2, pair.t2_edges, pair.depth2, pair.parent2, p.m),
    ):
        word = p.generator(pair.height(which))
        for v in range(g.n):
            if v != pair.root:
                colors[g.edge_id(v, parent[v])] = word[depth[v] - 1] + shift
    return EdgeColoring(tuple(colors), 2 * p.m), pair


def witness_path(pair: SpanningTreePair, u: int, v: int) -> list[int]:
    """Walk up T1 from u; if v is on that path stop there, otherwise switch
    to T2 at the shared vertex lying deepest on the T2 path from the root to v."""
    if u == v:
        raise ValueError("endpoints must differ")
    up = pair.tree_path_to_root(1, u)
    if v in up:
        return up[: up.index(v) + 1]
    down = pair.tree_path_to_root(2, v)[::-1]  # root ... v
    on_up = set(up)
    z_pos = max(i for i, x in enumerate(down) if x in on_up)
    z = down[z_pos]
    head = up[: up.index(z) + 1]
    tail = down[z_pos + 1 :]
    if set(head) & set(tail):
        raise AssertionError(f"witness pieces for ({u}, {v}) overlap beyond {z}")
    return head + tail


def witness_certificate(g: Graph, c: EdgeColoring, pair: SpanningTreePair) -> WitnessCertificate:
    """Witness paths for all n(n-1) ordered pairs."""
    cert = WitnessCertificate()
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                path = witness_path(pair, u, v)
                cert.add(u, v, path, c.sequence(g, path))
    return cert
