"""Figures written next to the delimited reports (matplotlib, Agg backend)."""

from __future__ import annotations

from pathlib import Path


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def relation_chart(by_relation: dict, title: str, path: Path) -> Path:
    """Stacked pass/fail bars per relation number."""
    plt = _pyplot()
    numbers = sorted(by_relation, key=int)
    passed = [by_relation[k]["pass"] for k in numbers]
    failed = [by_relation[k]["fail"] for k in numbers]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    xs = range(len(numbers))
    ax.bar(xs, passed, color="#4c956c", label="pass")
    ax.bar(xs, failed, bottom=passed, color="#d1495b", label="fail")
    ax.set_xticks(list(xs), [f"({k})" for k in numbers])
    ax.set_ylabel("cases")
    ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def cartan_heatmap(matrix, title: str, path: Path) -> Path:
    plt = _pyplot()
    size = len(matrix)
    fig, ax = plt.subplots(figsize=(1 + 0.6 * size, 1 + 0.6 * size))
    ax.imshow(matrix, cmap="coolwarm_r", vmin=-3, vmax=3)
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            ax.text(j, i, str(v), ha="center", va="center", fontsize=9)
    ax.set_xticks(range(size))
    ax.set_yticks(range(size))
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
