"""Open ear decompositions of 2-connected graphs.

``open_ear_decomposition`` returns any decomposition (cheap, DFS based).
``longest_first_ear_decomposition`` starts from a longest cycle and always
adds a longest available ear; the search is exhaustive with a vertex-budget
bound, so it is exponential in the worst case and meant for graphs of a few
dozen vertices. Among equally long candidates the lexicographically smallest
vertex sequence wins (an ear is compared in its smaller orientation, a cycle
rooted at its smallest vertex).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Graph, is_minimally_two_connected, is_two_connected

__all__ = [
    "Ear",
    "EarDecomposition",
    "ClaimReport",
    "open_ear_decomposition",
    "longest_first_ear_decomposition",
    "longest_cycle",
    "validate_structural_claims",
]


@dataclass(frozen=True)
class Ear:
    """Vertex sequence from s to t; a cycle repeats its start at the end."""

    vertices: tuple[int, ...]
    is_cycle: bool = False

    @property
    def s(self) -> int:
        return self.vertices[0]

    @property
    def t(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def vertex_pairs(self):
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class EarDecomposition:
    ears: tuple[Ear, ...]
    graph: Graph

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(e.length for e in self.ears)

    def ear_edge_ids(self, i: int) -> list[int]:
        return [self.graph.edge_id(a, b) for a, b in self.ears[i].vertex_pairs()]

    def problems(self) -> list[str]:
        """Violations of the decomposition invariants (empty when valid)."""
        g = self.graph
        out = []
        if not self.ears:
            return ["no ears"]
        first = self.ears[0]
        if not first.is_cycle or first.s != first.t or first.length < 3:
            out.append("first ear is not a cycle")
        seen_vertices: set[int] = set()
        seen_edges: set[int] = set()
        for i, ear in enumerate(self.ears):
            if i > 0:
                if ear.is_cycle:
                    out.append(f"ear {i} flagged as cycle")
                if ear.s == ear.t:
                    out.append(f"ear {i} is closed")
                for end in (ear.s, ear.t):
                    if end not in seen_vertices:
                        out.append(f"ear {i} endpoint {end} not in earlier ears")
            inner = ear.internal if i > 0 else ear.vertices[:-1]
            if len(set(inner)) != len(inner) or seen_vertices & set(inner):
                out.append(f"ear {i} internal vertices repeat or were used before")
            for a, b in ear.vertex_pairs():
                if not g.has_edge(a, b):
                    out.append(f"ear {i} uses non-edge ({a}, {b})")
                    continue
                eid = g.edge_id(a, b)
                if eid in seen_edges:
                    out.append(f"edge {eid} appears twice")
                seen_edges.add(eid)
            seen_vertices.update(ear.vertices)
        if len(seen_edges) != g.m:
            out.append(f"ears cover {len(seen_edges)} of {g.m} edges")
        if len(seen_vertices) != g.n:
            out.append(f"ears cover {len(seen_vertices)} of {g.n} vertices")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


def _first_cycle(g: Graph) -> tuple[int, ...]:
    parent = {0: None}
    depth = {0: 0}
    stack = [(0, iter(g.neighbors(0)))]
    while stack:
        v, it = stack[-1]
        for w, _ in it:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(g.neighbors(w))))
                break
            if w != parent[v] and depth[w] < depth[v]:
                path = [v]
                while path[-1] != w:
                    path.append(parent[path[-1]])
                path.reverse()
                return tuple(path) + (w,)
        else:
            stack.pop()
    raise PreconditionError("graph has no cycle")


def open_ear_decomposition(g: Graph) -> EarDecomposition:
    """Whitney decomposition: a DFS cycle, then DFS-found ears from the
    smallest attached vertex outward."""
    if not is_two_connected(g):
        raise PreconditionError("open ear decomposition needs a 2-connected graph")
    cycle = _first_cycle(g)
    ears = [Ear(cycle, True)]
    in_partial = [False] * g.n
    used = [False] * g.m
    for v in cycle:
        in_partial[v] = True
    for a, b in zip(cycle, cycle[1:]):
        used[g.edge_id(a, b)] = True
    remaining = g.m - len(cycle) + 1
    s = 0
    while remaining:
        while not (in_partial[s] and any(not used[e] for _, e in g.neighbors(s))):
            s += 1
        x, eid = next((w, e) for w, e in g.neighbors(s) if not used[e])
        if in_partial[x]:
            ear = (s, x)
        else:
            ear = _dfs_to_partial(g, s, x, in_partial)
        ears.append(Ear(ear))
        for a, b in zip(ear, ear[1:]):
            used[g.edge_id(a, b)] = True
        for v in ear:
            in_partial[v] = True
        remaining -= len(ear) - 1
        s = 0
    return EarDecomposition(tuple(ears), g)


def _dfs_to_partial(g: Graph, s: int, x: int, in_partial) -> tuple[int, ...]:
    parent = {x: s}
    stack = [(x, iter(g.neighbors(x)))]
    while stack:
        v, it = stack[-1]
        for w, _ in it:
            if w == s or w in parent:
                continue
            if in_partial[w]:
                path = [w, v]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            parent[w] = v
            stack.append((w, iter(g.neighbors(w))))
            break
        else:
            stack.pop()
    raise PreconditionError(f"no ear leaves vertex {s}; graph not 2-connected")


def longest_cycle(g: Graph) -> tuple[int, ...]:
    """A longest cycle as (r, a, ..., b, r) with r minimal and a < b;
    lexicographically smallest among the longest."""
    best: tuple[int, ...] | None = None
    best_len = 2
    for root in range(g.n):
        if g.n - root <= best_len:
            break
        on_path = [False] * g.n
        on_path[root] = True
        path = [root]
        free = g.n - root - 1  # vertices > root not on the path

        def extend(v):
            nonlocal best, best_len, free
            if len(path) + free <= best_len:
                return
            for w, _ in g.neighbors(v):
                if w == root:
                    if len(path) >= 3 and path[1] < path[-1] and len(path) > best_len:
                        best_len = len(path)
                        best = tuple(path) + (root,)
                elif w > root and not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    free -= 1
                    extend(w)
                    free += 1
                    path.pop()
                    on_path[w] = False

        extend(root)
    if best is None:
        raise PreconditionError("graph has no cycle")
    return best


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    rev = seq[::-1]
    return rev if rev < seq else seq


def _longest_ear(g: Graph, in_partial: list[bool], used: list[bool]) -> tuple[int, ...] | None:
    best: tuple[int, ...] | None = None
    best_len = 0

    def better(seq):
        nonlocal best, best_len
        cand = _canonical(seq)
        n_edges = len(cand) - 1
        if n_edges > best_len or (n_edges == best_len and cand < best):
            best, best_len = cand, n_edges

    # component sizes of the non-partial part bound the ear length
    comp = [-1] * g.n
    sizes = []
    for v in range(g.n):
        if in_partial[v] or comp[v] != -1:
            continue
        cid = len(sizes)
        comp[v] = cid
        stack, size = [v], 0
        while stack:
            x = stack.pop()
            size += 1
            for y, _ in g.neighbors(x):
                if not in_partial[y] and comp[y] == -1:
                    comp[y] = cid
                    stack.append(y)
        sizes.append(size)

    for s in range(g.n):
        if not in_partial[s]:
            continue
        for x, eid in g.neighbors(s):
            if used[eid]:
                continue
            if in_partial[x]:
                better((s, x))
                continue
            path = [s, x]
            visited = {x}
            free = sizes[comp[x]] - 1

            def extend(v):
                nonlocal free
                # path holds len(path)-1 edges; at most `free` more interior vertices plus the closing edge
                if len(path) + free < best_len:
                    return
                for w, _ in g.neighbors(v):
                    if w == s or w in visited:
                        continue
                    if in_partial[w]:
                        better(tuple(path) + (w,))
                    else:
                        visited.add(w)
                        path.append(w)
                        free -= 1
                        extend(w)
                        free += 1
                        path.pop()
                        visited.discard(w)

            extend(x)
    return best


def longest_first_ear_decomposition(h: Graph) -> EarDecomposition:
    """Longest cycle first, then repeatedly the longest ear available.

    Requires a minimally 2-connected input.
    """
    if not is_minimally_two_connected(h):
        raise PreconditionError("longest-first decomposition needs a minimally 2-connected graph")
    cycle = longest_cycle(h)
    ears = [Ear(cycle, True)]
    in_partial = [False] * h.n
    used = [False] * h.m
    for v in cycle:
        in_partial[v] = True
    for a, b in zip(cycle, cycle[1:]):
        used[h.edge_id(a, b)] = True
    remaining = h.m - (len(cycle) - 1)
    while remaining:
        ear = _longest_ear(h, in_partial, used)
        if ear is None:
            raise PreconditionError("no ear available; graph not 2-connected")
        ears.append(Ear(ear))
        for a, b in zip(ear, ear[1:]):
            used[h.edge_id(a, b)] = True
        for v in ear:
            in_partial[v] = True
        remaining -= len(ear) - 1
    return EarDecomposition(tuple(ears), h)


@dataclass
class ClaimReport:
    """Structural facts a longest-first decomposition of a minimally
    2-connected graph must satisfy."""

    nonincreasing: bool = True  # ear lengths never grow
    endpoints_nonadjacent: bool = True  # s_i t_i is not an edge of H_{i-1}
    same_short_ears_disjoint: bool = True  # 2-2 / 3-3 ears: no endpoint inside the earlier one
    two_on_three_ears: bool = True  # 2-ear hanging inside a 3-ear ends at its far endpoint
    every_ear_has_interior: bool = True
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.nonincreasing
            and self.endpoints_nonadjacent
            and self.same_short_ears_disjoint
            and self.two_on_three_ears
            and self.every_ear_has_interior
        )


def validate_structural_claims(ed: EarDecomposition) -> ClaimReport:
    rep = ClaimReport()
    ears = ed.ears
    lengths = ed.lengths
    for i in range(1, len(ears)):
        if lengths[i] > lengths[i - 1]:
            rep.nonincreasing = False
            rep.messages.append(f"ear {i} ({lengths[i]} edges) longer than ear {i - 1} ({lengths[i - 1]})")
        if lengths[i] < 2:
            rep.every_ear_has_interior = False
            rep.messages.append(f"ear {i} has no internal vertex")

    prefix_edges: set[frozenset] = set()
    for i, ear in enumerate(ears):
        if i > 0 and frozenset((ear.s, ear.t)) in prefix_edges:
            rep.endpoints_nonadjacent = False
            rep.messages.append(f"endpoints of ear {i} adjacent in H_{i - 1}")
        prefix_edges.update(frozenset(p) for p in ear.vertex_pairs())

    for i in range(1, len(ears)):
        pi = ears[i]
        for j in range(1, i):
            pj = ears[j]
            inner_j = set(pj.internal)
            if pi.length == pj.length and pi.length in (2, 3):
                if pi.s in inner_j or pi.t in inner_j:
                    rep.same_short_ears_disjoint = False
                    rep.messages.append(f"ear {i} has an endpoint inside ear {j}")
            if pi.length == 2 and pj.length == 3:
                h_j = set()
                for e in ears[: j + 1]:
                    h_j.update(frozenset(p) for p in e.vertex_pairs())
                for inside, other in ((pi.s, pi.t), (pi.t, pi.s)):
                    if inside not in inner_j:
                        continue
                    if other not in (pj.s, pj.t) or frozenset((inside, other)) in h_j:
                        rep.two_on_three_ears = False
                        rep.messages.append(f"2-ear {i} hangs inside 3-ear {j} but ends at {other}")
    return rep
