"""Matplotlib rendering for the histogram report path (file output only)."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_histogram_figure(
    counts: dict[int, int],
    out_path: str,
    threshold_d: int | None = None,
    title: str = "",
) -> None:
    """Render the far-apart pair distance histogram to an image file.

    When ``threshold_d`` (= twice the hyperbolicity) is given, the distance
    range whose pairs actually have to be evaluated (d > threshold) is shaded.
    """
    ds = sorted(counts)
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.bar(ds, [counts[d] for d in ds], width=0.9, color="steelblue")
    if threshold_d is not None and ds:
        ax.axvspan(threshold_d, max(ds) + 0.5, color="green", alpha=0.2,
                   label=f"evaluated range (d > {threshold_d})")
        ax.axvline(threshold_d, color="green", linestyle="--", linewidth=1)
        ax.legend()
    ax.set_xlabel("distance")
    ax.set_ylabel("far-apart pairs")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
