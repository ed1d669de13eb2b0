"""Text formats: DIMACS-style graphs, colorings, witness sets, DOT.

Vertices are 1-indexed on disk and 0-indexed in memory.

Graph::

    c label x1 1
    p edge 3 3
    e 1 2
    ...

Coloring (self-contained: the vertex count rides in a comment, so a
coloring alone is enough to rebuild the graph)::

    k 5 property strong
    c vertices 3
    e 1 2 4
    ...
"""
from __future__ import annotations

from typing import Iterable

from .errors import MalformedInputError
from .graph import EdgeColoring, Graph
from .verify import WitnessCertificate

__all__ = [
    "format_graph",
    "parse_graph",
    "format_coloring",
    "parse_coloring",
    "format_witnesses",
    "parse_witnesses",
    "to_dot",
    "looks_like_coloring",
]

# fixed palette for DOT output; colors beyond it cycle
DOT_PALETTE = ("red", "blue", "green3", "orange", "purple", "brown", "cyan3", "magenta", "gold3", "gray40")


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedInputError(f"line {lineno}: non-integer {what}: {' '.join(tokens)}") from None


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    for name, v in g.labels.items():
        lines.append(f"c label {name} {v + 1}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header = None
    edges = []
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok:
            continue
        kind = tok[0]
        if kind == "c":
            if len(tok) == 4 and tok[1] == "label":
                labels[tok[2]] = _ints(tok[3:], lineno, "label vertex")[0] - 1
        elif kind == "p":
            if header is not None:
                raise MalformedInputError(f"line {lineno}: second header")
            if len(tok) != 4 or tok[1] != "edge":
                raise MalformedInputError(f"line {lineno}: expected 'p edge <n> <m>'")
            header = _ints(tok[2:], lineno, "header field")
        elif kind == "e":
            if header is None:
                raise MalformedInputError(f"line {lineno}: edge before header")
            if len(tok) != 3:
                raise MalformedInputError(f"line {lineno}: expected 'e <u> <v>'")
            edges.append(tuple(_ints(tok[1:], lineno, "vertex")))
        else:
            raise MalformedInputError(f"line {lineno}: unknown line type {kind!r}")
    if header is None:
        raise MalformedInputError("missing 'p edge' header")
    n, m = header
    if len(edges) != m:
        raise MalformedInputError(f"header says {m} edges, body has {len(edges)}")
    return _build(n, edges, labels)


def _build(n, edges, labels=None) -> Graph:
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise MalformedInputError(f"edge ({u}, {v}) has a vertex outside 1..{n}")
    bad = [v for v in (labels or {}).values() if not 0 <= v < n]
    if bad:
        raise MalformedInputError(f"label points outside 1..{n}")
    try:
        return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges], labels)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from None


def looks_like_coloring(text: str) -> bool:
    for raw in text.splitlines():
        tok = raw.split()
        if tok and tok[0] != "c":
            return tok[0] == "k"
    return False


def format_coloring(g: Graph, c: EdgeColoring, prop: str = "strong") -> str:
    lines = [f"k {c.k} property {prop}", f"c vertices {g.n}"]
    for name, v in g.labels.items():
        lines.append(f"c label {name} {v + 1}")
    lines.extend(f"e {u + 1} {v + 1} {c[e]}" for e, (u, v) in enumerate(g.edges))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph | None = None) -> tuple[Graph, EdgeColoring, str]:
    """Returns ``(graph, coloring, property name)``.

    With ``g`` the coloring must cover exactly its edges and the colors are
    reordered to its edge ids; without it the graph is rebuilt from the
    file itself (edge order as listed).
    """
    k = prop = None
    n = None
    labels = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok:
            continue
        if tok[0] == "c":
            if len(tok) == 3 and tok[1] == "vertices":
                n = _ints(tok[2:], lineno, "vertex count")[0]
            elif len(tok) == 4 and tok[1] == "label":
                labels[tok[2]] = _ints(tok[3:], lineno, "label vertex")[0] - 1
        elif tok[0] == "k":
            if len(tok) != 4 or tok[2] != "property":
                raise MalformedInputError(f"line {lineno}: expected 'k <K> property <name>'")
            k = _ints(tok[1:2], lineno, "palette size")[0]
            prop = tok[3]
        elif tok[0] == "e":
            if k is None:
                raise MalformedInputError(f"line {lineno}: edge before 'k' header")
            if len(tok) != 4:
                raise MalformedInputError(f"line {lineno}: expected 'e <u> <v> <color>'")
            rows.append(tuple(_ints(tok[1:], lineno, "edge field")))
        else:
            raise MalformedInputError(f"line {lineno}: unknown line type {tok[0]!r}")
    if k is None:
        raise MalformedInputError("missing 'k <K> property <name>' header")
    for u, v, col in rows:
        if not 1 <= col <= k:
            raise MalformedInputError(f"edge ({u}, {v}) has color {col} outside 1..{k}")
    if g is None:
        if n is None:
            n = max((max(u, v) for u, v, _ in rows), default=1)
        g = _build(n, [(u, v) for u, v, _ in rows], labels)
        return g, EdgeColoring(tuple(r[2] for r in rows), k), prop
    colors = {}
    for u, v, col in rows:
        if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u - 1, v - 1):
            raise MalformedInputError(f"colored edge ({u}, {v}) is not in the graph")
        e = g.edge_id(u - 1, v - 1)
        if e in colors:
            raise MalformedInputError(f"edge ({u}, {v}) colored twice")
        colors[e] = col
    if len(colors) != g.m:
        raise MalformedInputError(f"coloring covers {len(colors)} of {g.m} edges")
    return g, EdgeColoring(tuple(colors[e] for e in range(g.m)), k), prop


def format_witnesses(w: WitnessCertificate) -> str:
    """One line per pair: ``w <u> <v> : <path vertices> : <colors>``."""
    lines = []
    for (u, v), wit in sorted(w):
        path = " ".join(str(x + 1) for x in wit.path)
        cols = " ".join(map(str, wit.colors))
        lines.append(f"w {u + 1} {v + 1} : {path} : {cols}")
    return "\n".join(lines) + "\n"


def parse_witnesses(text: str) -> WitnessCertificate:
    cert = WitnessCertificate()
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.startswith("c"):
            continue
        parts = raw.split(":")
        head = parts[0].split()
        if len(parts) != 3 or len(head) != 3 or head[0] != "w":
            raise MalformedInputError(f"line {lineno}: expected 'w <u> <v> : <path> : <colors>'")
        u, v = _ints(head[1:], lineno, "endpoint")
        path = _ints(parts[1].split(), lineno, "path vertex")
        cols = _ints(parts[2].split(), lineno, "color")
        cert.add(u - 1, v - 1, [x - 1 for x in path], cols)
    return cert


def to_dot(g: Graph, c: EdgeColoring | None = None, name: str = "G") -> str:
    names = {v: k for k, v in g.labels.items()}
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = names.get(v, str(v + 1))
        lines.append(f'  {v + 1} [label="{label}"];')
    for e, (u, v) in enumerate(g.edges):
        if c is None:
            lines.append(f"  {u + 1} -- {v + 1};")
        else:
            col = c[e]
            dot_col = DOT_PALETTE[(col - 1) % len(DOT_PALETTE)]
            lines.append(f'  {u + 1} -- {v + 1} [label="{col}", color="{dot_col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
