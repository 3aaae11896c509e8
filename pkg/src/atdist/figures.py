"""Matplotlib renderings of the report outputs.

Every report command can drop PNG figures next to its delimited output:
sweep curves (normalized distance vs threshold), per-measure operation
percentages, pairwise-matrix heatmaps, and the counterexample bar chart.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .report import MEASURES

_MEASURE_LABELS = {
    "label": "Label Distance",
    "ted": "Tree Edit Distance",
    "radical": "Radical Distance",
    "multiset": "Multiset Distance",
}
_OP_KINDS = ("remove", "add", "change", "match")


def sweep_distance_figure(rows: list[dict], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    eps = [row["epsilon"] for row in rows]
    for measure in MEASURES:
        ax.plot(eps, [row[f"{measure}_norm"] for row in rows], label=_MEASURE_LABELS[measure])
    ax.plot(eps, [row["wsd_norm"] for row in rows], label="Weighted Sum", linestyle="--")
    ax.set_xlabel("similarity limit")
    ax.set_ylabel("normalized distance")
    ax.set_ylim(bottom=0)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def sweep_operations_figure(rows: list[dict], path: Path) -> Path:
    fig, axes = plt.subplots(2, 2, figsize=(8.0, 6.0), sharex=True, sharey=True)
    eps = [row["epsilon"] for row in rows]
    for ax, measure in zip(axes.flat, MEASURES):
        stacks = [[row[f"{measure}_{kind}_pct"] for row in rows] for kind in _OP_KINDS]
        ax.stackplot(eps, stacks, labels=_OP_KINDS)
        ax.set_title(_MEASURE_LABELS[measure], fontsize=9)
        ax.set_ylim(0, 100)
    axes[0, 0].legend(fontsize=7, loc="center left")
    for ax in axes[1]:
        ax.set_xlabel("similarity limit")
    for ax in axes[:, 0]:
        ax.set_ylabel("% of operations")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def matrix_figure(names: list[str], matrix: np.ndarray, measure: str, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(0.6 * len(names) + 2.5, 0.6 * len(names) + 2.0))
    image = ax.imshow(matrix, cmap="viridis", vmin=0)
    ax.set_xticks(range(len(names)), names, rotation=90, fontsize=7)
    ax.set_yticks(range(len(names)), names, fontsize=7)
    ax.set_title(_MEASURE_LABELS.get(measure, measure), fontsize=10)
    fig.colorbar(image, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def counterexamples_figure(rows, path: Path) -> Path:
    names = [row.display for row in rows]
    x = np.arange(len(names))
    width = 0.2
    fig, ax = plt.subplots(figsize=(10.0, 4.5))
    for offset, measure in enumerate(MEASURES):
        values = [row.report.measure(measure).absolute for row in rows]
        ax.bar(x + (offset - 1.5) * width, values, width, label=_MEASURE_LABELS[measure])
    ax.set_xticks(x, names, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("absolute distance")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
