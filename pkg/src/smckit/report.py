"""Disk reports: delimited tables, DOT graphs, and rendered figures.

Rank-2 arrangements get a line-arrangement figure with chamber sign labels;
brick censuses get a bar chart.  Exact values go to CSV (rational strings);
figures are presentation only and use floats.  Output is deterministic for
fixed input: fixed figure geometry, pinned PNG metadata, no timestamps.
"""

import csv
import os
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .arrangement import ChamberGraph, graph_to_dot  # noqa: E402

_PNG_META = {"Software": "smckit"}


def _save(fig, path: str) -> None:
    fig.savefig(path, dpi=150, metadata=_PNG_META)
    plt.close(fig)


def write_arrangement_report(outdir: str, graph: ChamberGraph, *, label: str = "arrangement") -> List[str]:
    """chambers.csv + graph.dot, plus arrangement.png when the rank is 2.
    Returns the file names written (relative to outdir)."""
    os.makedirs(outdir, exist_ok=True)
    written = []

    with open(os.path.join(outdir, "chambers.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["chamber", "signs"] + [f"witness_{k}" for k in range(graph.dim)])
        for i, c in enumerate(graph.chambers):
            w.writerow([i, c.sign_string] + [str(x) for x in c.witness])
    written.append("chambers.csv")

    with open(os.path.join(outdir, "graph.dot"), "w") as fh:
        fh.write(graph_to_dot(graph) + "\n")
    written.append("graph.dot")

    if graph.dim == 2:
        _save(_arrangement_figure(graph, label), os.path.join(outdir, "arrangement.png"))
        written.append("arrangement.png")
    return written


def _arrangement_figure(graph: ChamberGraph, label: str):
    fig, ax = plt.subplots(figsize=(6, 6))
    reach = 1.3
    for k, n in enumerate(graph.normals):
        a, b = float(n[0]), float(n[1])
        # the line a*x + b*y = 0 has direction (-b, a)
        norm = (a * a + b * b) ** 0.5
        dx, dy = -b / norm, a / norm
        ax.plot([-reach * dx, reach * dx], [-reach * dy, reach * dy],
                color="0.3", lw=1.2)
        ax.annotate(f"H{k}", (1.12 * reach * dx, 1.12 * reach * dy),
                    ha="center", va="center", fontsize=9, color="0.3")
    for c in graph.chambers:
        x, y = float(c.witness[0]), float(c.witness[1])
        norm = (x * x + y * y) ** 0.5 or 1.0
        ax.annotate(c.sign_string, (0.95 * x / norm, 0.95 * y / norm),
                    ha="center", va="center", fontsize=10,
                    bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="0.6"))
    lim = 1.55
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_aspect("equal")
    ax.set_title(label)
    ax.set_axis_off()
    return fig


def write_brick_report(outdir: str, census: Sequence[Tuple[Tuple[int, ...], int]], *,
                       label: str = "bricks") -> List[str]:
    """bricks.csv (dim vector, iso-class count) + bricks.png bar chart."""
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "bricks.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["dim_vector", "count"])
        for vec, cnt in census:
            w.writerow([_vec_label(vec), cnt])
    written = ["bricks.csv"]

    fig, ax = plt.subplots(figsize=(max(4, 0.9 * len(census) + 2), 4))
    labels = [_vec_label(v) for v, _ in census]
    counts = [c for _, c in census]
    ax.bar(range(len(census)), counts, color="#4878a8")
    ax.set_xticks(range(len(census)))
    ax.set_xticklabels(labels, rotation=45 if census and len(labels[0]) > 3 else 0)
    ax.set_ylabel("iso classes")
    ax.set_title(label)
    if counts:
        ax.set_yticks(range(0, max(counts) + 1))
    fig.tight_layout()
    _save(fig, os.path.join(outdir, "bricks.png"))
    written.append("bricks.png")
    return written


def _vec_label(vec: Sequence[int]) -> str:
    if all(0 <= d <= 9 for d in vec):
        return "".join(str(d) for d in vec)
    return "-".join(str(d) for d in vec)
