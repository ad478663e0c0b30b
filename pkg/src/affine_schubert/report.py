"""
Structure-constant tables: delimited output plus a rendered heatmap.
"""

from __future__ import annotations

import csv

from .kschur import KEnv
from .weyl import grassmannians_by_length, partition_text, grassmannian_to_partition


def product_table(n: int, max_length: int, kind: str = "homology"):
    """All structure constants c_{u,v}^w with l(u)+l(v) <= max_length.

    Rows are (u, v, w, coefficient) with elements labelled by their
    partitions under the code bijection, sorted for deterministic output.
    """
    env = KEnv(n, max_degree=max(max_length, 8))
    grass = grassmannians_by_length(n, max_length)
    rows = []
    for du in range(max_length + 1):
        for u in grass[du]:
            for dv in range(max_length + 1 - du):
                for v in grass[dv]:
                    if kind == "homology":
                        table = env.kschur_product(u, v)
                    else:
                        table = env.affine_schur_product(u, v)
                    for w, c in table.items():
                        rows.append(
                            (
                                partition_text(grassmannian_to_partition(u)),
                                partition_text(grassmannian_to_partition(v)),
                                partition_text(grassmannian_to_partition(w)),
                                c,
                            )
                        )
    rows.sort()
    return rows


def write_csv(rows, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "w", "coeff"])
        writer.writerows(rows)


def write_heatmap(rows, path: str, title: str) -> None:
    """Render the (u, v) -> number-of-terms matrix of the table."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = sorted({r[0] for r in rows} | {r[1] for r in rows})
    idx = {lab: i for i, lab in enumerate(labels)}
    grid = [[0] * len(labels) for _ in labels]
    for u, v, _w, c in rows:
        grid[idx[u]][idx[v]] += c
    fig, ax = plt.subplots(figsize=(1 + 0.45 * len(labels), 1 + 0.45 * len(labels)))
    im = ax.imshow(grid, cmap="viridis")
    ax.set_xticks(range(len(labels)), labels, rotation=90, fontsize=7)
    ax.set_yticks(range(len(labels)), labels, fontsize=7)
    ax.set_xlabel("v")
    ax.set_ylabel("u")
    ax.set_title(title)
    fig.colorbar(im, ax=ax, label="sum of coefficients")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
