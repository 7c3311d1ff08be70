"""Figures written next to the CSV outputs of ``evcover scaling`` and ``evcover report``."""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": (5.0, 3.4),
    "savefig.dpi": 150,
}


def _axes():
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    return fig, ax


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context(STYLE):
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return path


def plot_scaling(sizes: Sequence[int], seconds: Sequence[float], path: str | Path) -> Path:
    """Wall time of the chordal evc pipeline against n, with an n^2 guide through the first point."""
    fig, ax = _axes()
    ax.loglog(sizes, seconds, "o-", color="#1f77b4", label="evc_chordal")
    if sizes and seconds[0] > 0:
        guide = [seconds[0] * (n / sizes[0]) ** 2 for n in sizes]
        ax.loglog(sizes, guide, "--", color="0.5", label=r"$\propto n^2$")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("wall time (s)")
    ax.legend(frameon=False)
    return _save(fig, path)


def plot_gaps(gaps: Sequence[int], path: str | Path, title: str = "") -> Path:
    """Histogram of evc - mvc_X over a corpus."""
    fig, ax = _axes()
    counts = Counter(gaps)
    keys = sorted(counts)
    ax.bar([str(k) for k in keys], [counts[k] for k in keys], color="#2ca02c", width=0.6)
    ax.set_xlabel(r"evc $-$ mvc$_X$")
    ax.set_ylabel("graphs")
    if title:
        ax.set_title(title, fontsize=9)
    return _save(fig, path)
