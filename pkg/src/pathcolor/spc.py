"""Strongly proper connected colorings built ear by ear.

Both constructions orient every processed ear from its first to its last
vertex, giving a strongly connected digraph (the *overlay*). Colors are
kept uniform per vertex: all arcs leaving v share ``out_color[v]`` and all
arcs entering v share ``in_color[v]``.

* :func:`color_mod3` (3 colors) needs every cycle length divisible by 3;
  every directed overlay path then reads as a block of 1,2,3,1,2,3,...
* :func:`color_spc5` (at most 5 colors) works for any 2-connected graph,
  using a longest-first ear decomposition of a minimally 2-connected
  spanning subgraph.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

from .ears import Ear, longest_first_ear_decomposition, open_ear_decomposition
from .errors import InvariantError, Mod3AdmissionError, PreconditionError
from .graph import (
    EdgeColoring,
    Graph,
    is_two_connected,
    minimally_two_connected_spanning,
    shortest_path,
)
from .words import STRONG, canonical_sequence

__all__ = [
    "Arc",
    "OrientedOverlay",
    "ShortEarOrientation",
    "OverlayReport",
    "color_mod3",
    "color_spc5",
    "check_overlay_invariants",
    "color_base_cycle",
]

PALETTE = 5


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    edge: int  # edge id in the colored graph
    ear: int


@dataclass
class OrientedOverlay:
    arcs: list[Arc] = field(default_factory=list)
    in_color: dict[int, int] = field(default_factory=dict)
    out_color: dict[int, int] = field(default_factory=dict)
    ears: list[Ear] = field(default_factory=list)  # processed ears, oriented

    def add_ear(self, g: Graph, ear: Ear) -> list[Arc]:
        idx = len(self.ears)
        self.ears.append(ear)
        new = [Arc(a, b, g.edge_id(a, b), idx) for a, b in ear.vertex_pairs()]
        self.arcs.extend(new)
        return new

    @property
    def vertices(self) -> set[int]:
        return {a.tail for a in self.arcs} | {a.head for a in self.arcs}

    def middle_arcs(self) -> set[tuple[int, int]]:
        """(tail, head) of the arc joining the two internal vertices of each
        3-edge ear."""
        return {(e.vertices[1], e.vertices[2]) for e in self.ears if not e.is_cycle and e.length == 3}

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(a.tail for a in self.arcs if a.head == v)

    def out_neighbors(self, v: int) -> list[int]:
        return sorted(a.head for a in self.arcs if a.tail == v)

    def is_strongly_connected(self) -> bool:
        verts = self.vertices
        if not verts:
            return False
        fwd, bwd = defaultdict(list), defaultdict(list)
        for a in self.arcs:
            fwd[a.tail].append(a.head)
            bwd[a.head].append(a.tail)
        root = min(verts)
        for adj in (fwd, bwd):
            seen = {root}
            q = deque([root])
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        q.append(y)
            if seen != verts:
                return False
        return True


@dataclass
class ShortEarOrientation:
    """Per 2-edge ear: (s', middle vertex, t')."""

    entries: list[tuple[int, int, int]] = field(default_factory=list)


def _color_arcs(overlay: OrientedOverlay, arcs: list[Arc], colors, out: dict[int, int]):
    for arc, col in zip(arcs, colors):
        out[arc.edge] = col
        overlay.out_color.setdefault(arc.tail, col)
        overlay.in_color.setdefault(arc.head, col)


def color_mod3(g: Graph, verify: bool = True) -> tuple[EdgeColoring, OrientedOverlay]:
    """3-coloring for 2-connected graphs whose cycle lengths are all 0 mod 3.

    Every ear gets its first arc colored like the arcs leaving its start,
    then continues canonically. The input is rejected with
    :class:`Mod3AdmissionError` as soon as an ear length, an endpoint
    distance, or the color arriving at an ear's end contradicts the
    divisibility hypothesis; with ``verify`` the finished coloring is also
    checked exhaustively.
    """
    if not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    ed = open_ear_decomposition(g)
    overlay = OrientedOverlay()
    colors: dict[int, int] = {}
    built: set[int] = set()
    for i, ear in enumerate(ed.ears):
        if ear.length % 3:
            raise Mod3AdmissionError(f"ear {i} has {ear.length} edges, not divisible by 3", ear)
        arcs = overlay.add_ear(g, ear)
        if ear.is_cycle:
            _color_arcs(overlay, arcs, canonical_sequence(ear.length, 1), colors)
        else:
            path = shortest_path(g, ear.s, ear.t, built)
            if path is None:
                raise InvariantError(f"ear {i} endpoints are not joined by earlier ears")
            if (len(path) - 1) % 3:
                raise Mod3AdmissionError(f"ear {i} endpoints at distance {len(path) - 1} (not 0 mod 3)", ear)
            seq = canonical_sequence(ear.length, overlay.out_color[ear.s])
            if seq[-1] != overlay.in_color[ear.t]:
                raise Mod3AdmissionError(f"ear {i} arrives at {ear.t} with a conflicting color", ear)
            _color_arcs(overlay, arcs, seq, colors)
        built.update(a.edge for a in arcs)
    coloring = EdgeColoring.from_mapping(g, colors, 3)
    if verify:
        from .verify import count_failing_pairs

        if count_failing_pairs(g, coloring, STRONG):
            raise Mod3AdmissionError("constructed coloring fails strong verification")
    return coloring, overlay


def color_base_cycle(length: int) -> list[int]:
    """Greedy cyclic coloring where each edge differs from the two edges
    before and after it. Never needs more than 5 colors (4 constraints)."""
    out: list[int] = []
    for j in range(length):
        banned = set(out[max(0, j - 2) : j])
        for ahead in (1, 2):
            k = (j + ahead) % length
            if k < j:
                banned.add(out[k])
        out.append(min(c for c in range(1, PALETTE + 1) if c not in banned))
    return out


def _color_long_ear(in_s: int, out_s: int, in_t: int, out_t: int, p: int) -> list[int]:
    """Colors for an ear of p >= 3 edges, framed by the arc entering s and
    the arc leaving t. First arc copies out(s), last copies in(t), the rest
    avoid everything within distance 2 that is already fixed."""
    ext: list[int | None] = [in_s, out_s] + [None] * (p - 2) + [in_t, out_t]
    fixed_right = {p, p + 1}
    for j in range(2, p):
        banned = {ext[j - 2], ext[j - 1]}
        for ahead in (j + 1, j + 2):
            if ahead in fixed_right:
                banned.add(ext[ahead])
        ext[j] = min(c for c in range(1, PALETTE + 1) if c not in banned)
    return ext[1 : p + 1]


def color_spc5(g: Graph) -> tuple[EdgeColoring, OrientedOverlay, ShortEarOrientation]:
    """At most 5 colors making any 2-connected graph strongly proper connected.

    Edges outside the minimally 2-connected spanning subgraph get color 1.
    """
    if g.n < 3 or not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    h = minimally_two_connected_spanning(g)
    ed = longest_first_ear_decomposition(h)
    lengths = ed.lengths
    last_long = max(i for i, n_edges in enumerate(lengths) if n_edges >= 3)
    if any(n_edges != 2 for n_edges in lengths[last_long + 1 :]):
        raise InvariantError(f"ear lengths {lengths} not of the form (>=3 ..., 2 ...)")

    overlay = OrientedOverlay()
    colors: dict[int, int] = {}
    for i in range(last_long + 1):
        ear = ed.ears[i]
        arcs = overlay.add_ear(g, ear)
        if ear.is_cycle:
            _color_arcs(overlay, arcs, color_base_cycle(ear.length), colors)
            continue
        s, t = ear.s, ear.t
        if not overlay.in_neighbors(s) or not overlay.out_neighbors(t):
            raise InvariantError(f"ear {i} attaches outside the overlay")
        seq = _color_long_ear(
            overlay.in_color[s], overlay.out_color[s], overlay.in_color[t], overlay.out_color[t], ear.length
        )
        _color_arcs(overlay, arcs, seq, colors)

    orientation = ShortEarOrientation()
    middle = overlay.middle_arcs()
    middle_heads = {b for _, b in middle}
    middle_tails = {a for a, _ in middle}
    in_overlay = overlay.vertices
    for ear in ed.ears[last_long + 1 :]:
        mid = ear.vertices[1]
        for s2, t2 in ((ear.s, ear.t), (ear.t, ear.s)):
            if s2 not in middle_heads and t2 not in middle_tails:
                break
        else:
            raise InvariantError(f"no admissible orientation for 2-edge ear {ear.vertices}")
        if s2 not in in_overlay or t2 not in in_overlay:
            raise InvariantError(f"2-edge ear {ear.vertices} attaches outside the overlay")
        orientation.entries.append((s2, mid, t2))
        colors[g.edge_id(s2, mid)] = overlay.out_color[s2]
        colors[g.edge_id(mid, t2)] = overlay.in_color[t2]

    for eid in range(g.m):
        colors.setdefault(eid, 1)
    used = max(colors.values())
    if used > PALETTE:
        raise InvariantError(f"construction used color {used}")
    return EdgeColoring.from_mapping(g, colors, used), overlay, orientation


@dataclass
class OverlayReport:
    out_uniform: bool = True
    in_uniform: bool = True  # spc5 mode also requires in-color != out-color
    distance_two: bool = True  # spc5 only: in(u) != out(v) across arcs uv off 3-ear middles
    local_law: bool = True  # mod3 only: out = in + 1 (mod 3)
    degrees: bool = True
    strongly_connected: bool = True
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.out_uniform
            and self.in_uniform
            and self.distance_two
            and self.local_law
            and self.degrees
            and self.strongly_connected
        )


def check_overlay_invariants(d: OrientedOverlay, c: EdgeColoring, mode: str) -> OverlayReport:
    """Recheck the per-vertex color invariants from the coloring itself."""
    if mode not in ("mod3", "spc5"):
        raise ValueError("mode must be 'mod3' or 'spc5'")
    rep = OverlayReport()
    ins: dict[int, set[int]] = defaultdict(set)
    outs: dict[int, set[int]] = defaultdict(set)
    in_arcs: dict[int, list[Arc]] = defaultdict(list)
    out_arcs: dict[int, list[Arc]] = defaultdict(list)
    for a in d.arcs:
        outs[a.tail].add(c[a.edge])
        ins[a.head].add(c[a.edge])
        out_arcs[a.tail].append(a)
        in_arcs[a.head].append(a)
    for v in sorted(d.vertices):
        if not ins[v] or not outs[v]:
            rep.degrees = False
            rep.messages.append(f"vertex {v} lacks an in- or out-arc")
            continue
        if len(outs[v]) > 1:
            rep.out_uniform = False
            rep.messages.append(f"arcs leaving {v} use colors {sorted(outs[v])}")
        if len(ins[v]) > 1:
            rep.in_uniform = False
            rep.messages.append(f"arcs entering {v} use colors {sorted(ins[v])}")
        if mode == "spc5" and ins[v] & outs[v]:
            rep.in_uniform = False
            rep.messages.append(f"vertex {v} has equal in- and out-colors")
        if mode == "mod3":
            if any((o - i) % 3 != 1 for o in outs[v] for i in ins[v]):
                rep.local_law = False
                rep.messages.append(f"vertex {v}: out-color is not in-color + 1 mod 3")
    if mode == "spc5":
        middle = d.middle_arcs()
        for a in d.arcs:
            if (a.tail, a.head) in middle:
                continue
            for x in in_arcs[a.tail]:
                for y in out_arcs[a.head]:
                    if c[x.edge] == c[y.edge]:
                        rep.distance_two = False
                        rep.messages.append(f"arcs into {a.tail} and out of {a.head} share color {c[x.edge]}")
    if not d.is_strongly_connected():
        rep.strongly_connected = False
        rep.messages.append("overlay is not strongly connected")
    return rep
