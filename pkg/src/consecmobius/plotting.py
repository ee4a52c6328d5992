"""Matplotlib renderings written to files: benchmark scaling and Hasse diagrams."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib
import matplotlib.ticker

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRow  # noqa: E402
from .perm import format_perm  # noqa: E402
from .poset import HasseDiagram  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "legend.frameon": False,
    "savefig.dpi": 150,
}


def plot_bench(rows: Sequence[BenchRow], slope: float, path) -> Path:
    path = Path(path)
    ns = [r.n for r in rows]
    ts = [r.seconds for r in rows]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.2))
        ax.loglog(ns, ts, "o-", color="k", label="mobius_fast")
        if len(rows) >= 2 and not math.isnan(slope):
            # cubic reference through the last point
            ref = [ts[-1] * (n / ns[-1]) ** 3 for n in ns]
            ax.loglog(ns, ref, "--", color="0.6", label="n$^3$ reference")
            ax.set_title(f"fitted slope {slope:.2f}")
        ax.set_xticks(ns, [str(n) for n in ns])
        ax.xaxis.set_minor_formatter(matplotlib.ticker.NullFormatter())
        ax.set_xlabel("|tau|")
        ax.set_ylabel("seconds")
        ax.legend()
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_hasse(diagram: HasseDiagram, path) -> Path:
    """Nodes layered by length, spread evenly within each layer."""
    path = Path(path)
    layers: dict[int, list] = {}
    for z in diagram.nodes:
        layers.setdefault(len(z), []).append(z)
    pos = {}
    for length, zs in layers.items():
        for i, z in enumerate(zs):
            pos[z] = (i - (len(zs) - 1) / 2, length)
    width = max(len(zs) for zs in layers.values())
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(3.0, 1.6 * width), 0.9 * len(layers) + 1))
        for u, v in diagram.edges:
            (x0, y0), (x1, y1) = pos[u], pos[v]
            ax.plot([x0, x1], [y0, y1], color="0.5", lw=0.8, zorder=1)
        for z, (x, y) in pos.items():
            ax.text(x, y, format_perm(z) if len(z) > 9 else "".join(map(str, z)),
                    ha="center", va="center", fontsize=8, zorder=2,
                    bbox=dict(boxstyle="round,pad=0.2", fc="white", ec="0.3", lw=0.6))
        ax.set_xlim(-width / 2 - 0.5, width / 2 + 0.5)
        ax.set_ylim(min(layers) - 0.6, max(layers) + 0.6)
        ax.axis("off")
        ax.set_title(f"[{format_perm(diagram.sigma)}, {format_perm(diagram.tau)}]", fontsize=9)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path
