"""Figure and delimited-text rendering for interval reports.

The report path of the CLI writes a matplotlib figure next to each
delimited table: the three-row coarse grid as a box diagram, and Hasse
diagrams for small intervals.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .poset import Interval
from .winterval import CoarseTable


def coarse_grid_text(table: CoarseTable) -> str:
    """The three-row grid as aligned text (top row first)."""
    n = table.rank
    width = max(len(str(v)) for v in table.bottom + table.middle + table.top)
    cell = lambda v: str(v).rjust(width)
    gap = " " * (width + 2)
    lines = [
        2 * gap + "  ".join(cell(v) for v in table.top),
        gap + "  ".join(cell(v) for v in table.middle),
        "  ".join(cell(v) for v in table.bottom),
    ]
    return "\n".join(lines)


def write_delimited(rows: list[list[str]], out) -> None:
    writer = csv.writer(out)
    writer.writerows(rows)


def delimited_string(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    write_delimited(rows, buf)
    return buf.getvalue()


def render_coarse_grid(table: CoarseTable, path: Path) -> None:
    """Draw the coarse box grid: bottom/middle/top rows of element and
    family counts, offset by reflection length."""
    n = table.rank
    fig, ax = plt.subplots(figsize=(1.2 * (n + 2) + 1, 4))
    rows = [(0, 0, table.bottom), (1, 1, table.middle), (2, 2, table.top)]
    for y, x0, values in rows:
        for i, v in enumerate(values):
            x = x0 + i
            ax.add_patch(plt.Rectangle((x, y), 0.9, 0.9, fill=False))
            ax.text(x + 0.45, y + 0.45, str(v), ha="center", va="center")
    ax.set_xlim(-0.2, n + 2.1)
    ax.set_ylim(-0.2, 3.1)
    ax.set_yticks([0.45, 1.45, 2.45])
    ax.set_yticklabels(["bottom", "middle", "top"])
    ax.set_xticks(np.arange(n + 2) + 0.45)
    ax.set_xticklabels([str(l) for l in range(n + 2)])
    ax.set_xlabel("reflection length")
    ax.set_aspect("equal")
    for side in ("top", "right", "left", "bottom"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_hasse(interval: Interval, path: Path, max_elements: int = 300) -> None:
    """Hasse diagram with elements spread by weight; skipped (with a note
    in the file name handling by the caller) for very large intervals."""
    if len(interval) > max_elements:
        raise ValueError(f"interval too large to draw ({len(interval)} elements)")
    weights = sorted(set(interval.weights))
    by_level = {w: [i for i in range(len(interval)) if interval.weights[i] == w]
                for w in weights}
    pos = {}
    for li, w in enumerate(weights):
        idxs = by_level[w]
        xs = np.linspace(0, 1, len(idxs) + 2)[1:-1]
        for x, i in zip(xs, idxs):
            pos[i] = (float(x), li)
    fig, ax = plt.subplots(figsize=(8, 1.2 * len(weights) + 1))
    for a, b in interval.hasse_edges():
        ia, ib = interval.index[a], interval.index[b]
        (xa, ya), (xb, yb) = pos[ia], pos[ib]
        ax.plot([xa, xb], [ya, yb], lw=0.5, color="0.6", zorder=1)
    xs = np.array([pos[i][0] for i in range(len(interval))])
    ys = np.array([pos[i][1] for i in range(len(interval))])
    ax.scatter(xs, ys, s=12, color="black", zorder=2)
    ax.set_yticks(range(len(weights)))
    ax.set_yticklabels([str(w) for w in weights])
    ax.set_ylabel("weight")
    ax.set_xticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
