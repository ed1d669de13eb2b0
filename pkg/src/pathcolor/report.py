"""Batch report: delimited tables plus matplotlib figures written to a directory.

Figures use the Agg backend, so no display is needed.
"""
from __future__ import annotations

import csv
from dataclasses import asdict, dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .ears import EarDecomposition  # noqa: E402
from .graph import EdgeColoring, Graph  # noqa: E402

__all__ = ["ReportRow", "spectral_layout", "draw_coloring", "plot_color_counts", "plot_ear_lengths", "write_report"]

EDGE_COLORS = plt.get_cmap("tab10").colors


@dataclass
class ReportRow:
    name: str
    n: int
    m: int
    method: str
    property: str
    colors_declared: int
    colors_used: int
    connected: bool
    ear_lengths: str
    seconds: float


def spectral_layout(g: Graph) -> np.ndarray:
    """Positions from the two Laplacian eigenvectors after the constant one;
    falls back to a circle when they collapse."""
    n = g.n
    if n <= 2:
        return np.array([[float(i), 0.0] for i in range(n)])
    lap = np.zeros((n, n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
        lap[u, u] += 1.0
        lap[v, v] += 1.0
    _, vecs = np.linalg.eigh(lap)
    pos = vecs[:, 1:3]
    spread = np.ptp(pos, axis=0)
    if np.any(spread < 1e-9) or len(np.unique(np.round(pos, 6), axis=0)) < n:
        ang = 2 * np.pi * np.arange(n) / n
        return np.column_stack([np.cos(ang), np.sin(ang)])
    return (pos - pos.mean(axis=0)) / spread.max()


def draw_coloring(g: Graph, c: EdgeColoring, path, title: str = ""):
    pos = spectral_layout(g)
    fig, ax = plt.subplots(figsize=(6, 6))
    for e, (u, v) in enumerate(g.edges):
        col = EDGE_COLORS[(c[e] - 1) % len(EDGE_COLORS)]
        ax.plot(*zip(pos[u], pos[v]), color=col, lw=2, zorder=1)
    ax.scatter(pos[:, 0], pos[:, 1], s=60, c="white", edgecolors="black", zorder=2)
    if g.n <= 40:
        names = {v: k for k, v in g.labels.items()}
        for v in range(g.n):
            ax.annotate(names.get(v, str(v + 1)), pos[v], ha="center", va="center", fontsize=6, zorder=3)
    handles = [
        plt.Line2D([], [], color=EDGE_COLORS[(k - 1) % len(EDGE_COLORS)], lw=2, label=str(k))
        for k in sorted(set(c.colors))
    ]
    ax.legend(handles=handles, title="color", loc="upper right", fontsize=7)
    ax.set_title(title)
    ax.set_axis_off()
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def plot_color_counts(c: EdgeColoring, path, title: str = ""):
    counts = np.bincount(np.asarray(c.colors), minlength=c.k + 1)[1:]
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(np.arange(1, c.k + 1), counts, color=[EDGE_COLORS[i % 10] for i in range(c.k)])
    ax.set_xlabel("color")
    ax.set_ylabel("edges")
    ax.set_xticks(np.arange(1, c.k + 1))
    ax.set_title(title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def plot_ear_lengths(ed: EarDecomposition, path, title: str = ""):
    lengths = ed.lengths
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.step(np.arange(len(lengths)), lengths, where="mid")
    ax.plot(np.arange(len(lengths)), lengths, "o", ms=3)
    ax.set_xlabel("ear index")
    ax.set_ylabel("edges")
    ax.set_title(title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def write_report(rows: list[ReportRow], items, outdir) -> list[Path]:
    """Write ``summary.csv``, one ``<name>_edges.csv`` per instance and the
    figures. ``items`` pairs with ``rows``: ``(graph, coloring, ears or None)``."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    summary = out / "summary.csv"
    with summary.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(ReportRow.__dataclass_fields__))
        w.writeheader()
        for row in rows:
            w.writerow(asdict(row))
    written.append(summary)
    for row, (g, c, ed) in zip(rows, items):
        edges = out / f"{row.name}_edges.csv"
        with edges.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["u", "v", "color"])
            for e, (u, v) in enumerate(g.edges):
                w.writerow([u + 1, v + 1, c[e]])
        written.append(edges)
        fig = out / f"{row.name}_coloring.png"
        draw_coloring(g, c, fig, f"{row.name}: {row.method}, {row.colors_used} colors")
        written.append(fig)
        fig = out / f"{row.name}_color_counts.png"
        plot_color_counts(c, fig, row.name)
        written.append(fig)
        if ed is not None:
            fig = out / f"{row.name}_ears.png"
            plot_ear_lengths(ed, fig, f"{row.name}: ear lengths")
            written.append(fig)
    return written
