"""Command-line front end.

Exit codes: 0 success, 1 negative answer (not connected, no coloring
found, a structural check failed), 2 malformed input, 3 precondition
violated.
"""
from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path

from . import constructs
from .ears import longest_first_ear_decomposition, open_ear_decomposition, validate_structural_claims
from .errors import InvariantError, MalformedInputError, PreconditionError
from .graph import Graph, is_minimally_two_connected, minimally_two_connected_spanning
from .io import (
    format_coloring,
    format_graph,
    format_witnesses,
    looks_like_coloring,
    parse_coloring,
    parse_graph,
    parse_witnesses,
    to_dot,
)
from .report import ReportRow, write_report
from .spc import color_mod3, color_spc5
from .trees import two_tree_color, witness_certificate
from .verify import (
    DEFAULT_EDGE_CAP,
    exact_connection_number,
    stochastic_search,
    verify_connected_coloring,
    verify_witness_set,
)
from .words import PROPERTIES, get_property

OK, NEGATIVE, MALFORMED, PRECONDITION = 0, 1, 2, 3

NAMED = {
    "k4": lambda: constructs.complete_graph(4),
    "k5": lambda: constructs.complete_graph(5),
    "k6": lambda: constructs.complete_graph(6),
    "k23": lambda: constructs.complete_bipartite(2, 3),
    "octahedron": constructs.octahedron,
    "theta": constructs.theta_graph,
    "mod3ears": constructs.mod3_ear_graph,
    "fourears": constructs.four_ear_graph,
}


def named_graph(name: str) -> Graph:
    """``c<n>`` is the n-cycle, ``k<n>`` the complete graph; see NAMED for the rest."""
    key = name.lower()
    if key in NAMED:
        return NAMED[key]()
    m = re.fullmatch(r"([ck])(\d+)", key)
    if m:
        n = int(m.group(2))
        if m.group(1) == "c" and n >= 3:
            return constructs.cycle_graph(n)
        if m.group(1) == "k" and n >= 1:
            return constructs.complete_graph(n)
    raise PreconditionError(f"unknown graph name {name!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    """Graph, coloring or None, and the property named in the coloring header."""
    text = _read(args.input)
    coloring_path = getattr(args, "coloring", None)
    if looks_like_coloring(text):
        g, c, prop = parse_coloring(text)
        if coloring_path:
            g, c, prop = parse_coloring(_read(coloring_path), g)
        return g, c, prop
    g = parse_graph(text)
    if coloring_path:
        g, c, prop = parse_coloring(_read(coloring_path), g)
        return g, c, prop
    return g, None, None


def _emit(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _property(name):
    try:
        return get_property(name)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None


# ---------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    if args.kind == "gd":
        g = constructs.build_gd(a=args.a, b=args.b, d=args.d)
        note = f"girth family a={args.a} b={args.b} d={args.d}"
    elif args.kind == "mod3":
        base = parse_graph(_read(args.base_file)) if args.base_file else named_graph(args.base)
        g = constructs.build_mod3(base, seed=args.seed)
        note = f"mod3 subdivision of {args.base_file or args.base} seed={args.seed}"
    elif args.kind == "random2c":
        g = constructs.random_two_connected(args.n, args.extra, args.seed)
        note = f"random 2-connected n={args.n} extra={args.extra} seed={args.seed}"
    elif args.kind == "randmin2c":
        g = constructs.random_min_two_connected(args.n, args.extra, args.seed)
        note = f"random minimally 2-connected n={args.n} extra={args.extra} seed={args.seed}"
    elif args.kind == "kedge":
        g = constructs.random_k_edge_connected(args.n, args.k, args.seed)
        note = f"random {args.k}-edge-connected n={args.n} seed={args.seed}"
    else:
        g = named_graph(args.name)
        note = args.name
    _emit(format_graph(g, [note]), args.output)
    return OK


def cmd_ears(args) -> int:
    g, _, _ = _load(args)
    if args.longest_first:
        h = g if is_minimally_two_connected(g) else minimally_two_connected_spanning(g)
        ed = longest_first_ear_decomposition(h)
    else:
        ed = open_ear_decomposition(g)
    lines = [f"c ears {len(ed.ears)} lengths {' '.join(map(str, ed.lengths))}"]
    for i, ear in enumerate(ed.ears):
        kind = "cycle" if ear.is_cycle else "ear"
        lines.append(f"{kind} {i + 1} {ear.length} : {' '.join(str(v + 1) for v in ear.vertices)}")
    status = OK
    if args.validate_claims:
        rep = validate_structural_claims(ed)
        for field in ("nonincreasing", "endpoints_nonadjacent", "same_short_ears_disjoint",
                      "two_on_three_ears", "every_ear_has_interior"):
            lines.append(f"claim {field} {'pass' if getattr(rep, field) else 'FAIL'}")
        lines.extend(f"c {msg}" for msg in rep.messages)
        status = OK if rep.ok else NEGATIVE
    _emit("\n".join(lines) + "\n", None)
    return status


def cmd_color(args) -> int:
    g, _, _ = _load(args)
    prop = args.property
    if args.method == "twotree":
        p = _property(prop or "nonrep")
        c, pair = two_tree_color(g, p)
        _emit(format_coloring(g, c, p.name), args.output)
        wpath = args.witness or (args.output + ".witness" if args.output not in (None, "-") else None)
        if wpath:
            Path(wpath).write_text(format_witnesses(witness_certificate(g, c, pair)))
        return OK
    # the ear constructions give strongly proper paths, which are also proper
    if prop not in (None, "strong", "proper"):
        raise PreconditionError(f"method {args.method} certifies strong/proper connection, not {prop}")
    if args.method == "mod3":
        c, _ = color_mod3(g)
    else:
        c, _, _ = color_spc5(g)
    _emit(format_coloring(g, c, prop or "strong"), args.output)
    return OK


def cmd_verify(args) -> int:
    g, c, prop = _load(args)
    if c is None:
        raise MalformedInputError("verify needs a coloring (a coloring file as input or --coloring)")
    p = _property(args.property or prop)
    if args.witness:
        chk = verify_witness_set(g, c, parse_witnesses(_read(args.witness)), p)
        where = "" if chk.pair is None else f" at ({chk.pair[0] + 1}, {chk.pair[1] + 1})"
        print(f"witnesses {'valid' if chk.ok else 'INVALID'}{where} {chk.problem}".rstrip())
        return OK if chk.ok else NEGATIVE
    res = verify_connected_coloring(g, c, p)
    pairs = g.n * (g.n - 1) // 2
    print(f"property {p.name} colors {c.k} used {c.used} vertices {g.n} edges {g.m}")
    print(f"pairs {pairs} failing {len(res.failing_pairs)}")
    for u, v in res.failing_pairs[:10]:
        print(f"fail {u + 1} {v + 1}")
    print("connected" if res.connected else "NOT connected")
    return OK if res.connected else NEGATIVE


def cmd_exact(args) -> int:
    g, _, _ = _load(args)
    p = _property(args.property)
    try:
        k = exact_connection_number(g, p, args.kmax, cap=args.cap)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    print("none" if k is None else k)
    return NEGATIVE if k is None else OK


def cmd_search(args) -> int:
    g, _, _ = _load(args)
    p = _property(args.property)
    c = stochastic_search(g, p, args.k, args.budget, seed=args.seed)
    if c is None:
        print("none")
        return NEGATIVE
    _emit(format_coloring(g, c, p.name), args.output)
    return OK


def cmd_export_dot(args) -> int:
    g, c, _ = _load(args)
    _emit(to_dot(g, c), args.output)
    return OK


def cmd_report(args) -> int:
    rows, items = [], []
    for i, path in enumerate(args.input):
        text = _read(path)
        g = parse_coloring(text)[0] if looks_like_coloring(text) else parse_graph(text)
        name = "stdin" if path == "-" else Path(path).stem
        if any(r.name == name for r in rows):
            name = f"{name}_{i + 1}"
        t0 = time.perf_counter()
        ed = None
        if args.method == "twotree":
            p = _property(args.property or "nonrep")
            c, _ = two_tree_color(g, p)
        else:
            p = _property(args.property or "strong")
            if args.method == "mod3":
                c, _ = color_mod3(g)
                ed = open_ear_decomposition(g)
            else:
                c, _, _ = color_spc5(g)
                ed = longest_first_ear_decomposition(minimally_two_connected_spanning(g))
        connected = verify_connected_coloring(g, c, p).connected
        dt = time.perf_counter() - t0
        lengths = " ".join(map(str, ed.lengths)) if ed else ""
        rows.append(ReportRow(name, g.n, g.m, args.method, p.name, c.k, c.used, connected, lengths, round(dt, 4)))
        items.append((g, c, ed))
    for path in write_report(rows, items, args.outdir):
        print(path)
    return OK if all(r.connected for r in rows) else NEGATIVE


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathcolor", description="Pattern-connected edge colorings of graphs.")
    sub = ap.add_subparsers(dest="command", required=True)
    props = sorted(PROPERTIES)

    gen = sub.add_parser("gen", help="generate a graph file")
    gen.add_argument("kind", choices=["gd", "mod3", "random2c", "randmin2c", "kedge", "named"])
    gen.add_argument("--a", type=int, default=3)
    gen.add_argument("--b", type=int, default=3)
    gen.add_argument("--d", type=int, default=3)
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--extra", type=int, default=3, help="chords added to the random Hamiltonian cycle")
    gen.add_argument("--k", type=int, default=4, help="edge connectivity for kedge")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--base", default="k4", help="named base graph for mod3 (k4, c5, theta, ...)")
    gen.add_argument("--base-file", help="graph file used as the mod3 base instead of --base")
    gen.add_argument("--name", default="c5", help="graph for 'named': c<n>, k<n>, k23, octahedron, ...")
    gen.add_argument("--output", "-o", default="-")
    gen.set_defaults(func=cmd_gen)

    ears = sub.add_parser("ears", help="list an open ear decomposition")
    ears.add_argument("--input", "-i", default="-")
    ears.add_argument("--longest-first", action="store_true",
                      help="longest-first decomposition of a minimally 2-connected spanning subgraph")
    ears.add_argument("--validate-claims", action="store_true")
    ears.set_defaults(func=cmd_ears)

    color = sub.add_parser("color", help="color a graph")
    color.add_argument("--method", choices=["spc5", "mod3", "twotree"], default="spc5")
    color.add_argument("--property", choices=props)
    color.add_argument("--input", "-i", default="-")
    color.add_argument("--output", "-o", default="-")
    color.add_argument("--witness", help="witness file for twotree (default: <output>.witness)")
    color.set_defaults(func=cmd_color)

    ver = sub.add_parser("verify", help="check that a coloring is connected for a property")
    ver.add_argument("--input", "-i", default="-")
    ver.add_argument("--coloring", "-c")
    ver.add_argument("--property", choices=props)
    ver.add_argument("--witness", help="check this witness file instead of searching")
    ver.set_defaults(func=cmd_verify)

    ex = sub.add_parser("exact", help="exact connection number by exhaustive search")
    ex.add_argument("--input", "-i", default="-")
    ex.add_argument("--property", choices=props, default="strong")
    ex.add_argument("--kmax", type=int, default=5)
    ex.add_argument("--cap", type=int, default=DEFAULT_EDGE_CAP, help="refuse graphs with more edges")
    ex.set_defaults(func=cmd_exact)

    se = sub.add_parser("search", help="simulated annealing for a k-coloring")
    se.add_argument("--input", "-i", default="-")
    se.add_argument("--property", choices=props, default="strong")
    se.add_argument("--k", type=int, required=True)
    se.add_argument("--budget", type=int, default=100_000)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--output", "-o", default="-")
    se.set_defaults(func=cmd_search)

    dot = sub.add_parser("export-dot", help="DOT text with edge colors")
    dot.add_argument("--input", "-i", default="-")
    dot.add_argument("--coloring", "-c")
    dot.add_argument("--output", "-o", default="-")
    dot.set_defaults(func=cmd_export_dot)

    rep = sub.add_parser("report", help="color graphs and write CSV tables plus PNG figures")
    rep.add_argument("--input", "-i", action="append", required=True)
    rep.add_argument("--method", choices=["spc5", "mod3", "twotree"], default="spc5")
    rep.add_argument("--property", choices=props)
    rep.add_argument("--outdir", default="report")
    rep.set_defaults(func=cmd_report)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return PRECONDITION
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
