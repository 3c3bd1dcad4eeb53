"""Matplotlib figures of rank-2 regions (written to files, never shown)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .region import RegionSample, face_curves  # noqa: E402

__all__ = ["plot_region"]


def plot_region(boundary: RegionSample, path: str | Path,
                interior: RegionSample | None = None, log: bool = False) -> Path:
    """Draw the boundary curves, the cusp and optionally interior points.

    The file format follows the suffix of ``path`` (``.png``, ``.pdf``, ``.svg``).
    """
    if boundary.rank != 2:
        raise ValueError(f"figures need rank 2, {boundary.type} has rank {boundary.rank}")
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 5), dpi=120)
    if interior is not None and interior.rows:
        ax.scatter([r[2] for r in interior.rows], [r[3] for r in interior.rows],
                   s=2, color="0.8", label="sampled region", rasterized=True)
    for lab, pts in sorted(face_curves(boundary).items()):
        if pts:
            ax.plot([x for x, _ in pts], [y for _, y in pts], lw=1.5,
                    label=f"face $t_{{{lab}}}=0$")
    cx, cy = boundary.dims
    ax.plot([cx], [cy], "ko", ms=5)
    ax.annotate(f"({cx}, {cy})", (cx, cy), textcoords="offset points", xytext=(6, 6))
    if log:
        ax.set_xscale("log")
        ax.set_yscale("log")
    lab1, lab2 = boundary.labels
    ax.set_xlabel(f"$C_{{{lab1}}}$")
    ax.set_ylabel(f"$C_{{{lab2}}}$")
    ax.set_title(f"{boundary.type}: image of $t \\geq 0$")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    # drop timestamps and version strings so reruns give identical files
    metadata = {".png": {"Software": None}, ".pdf": {"CreationDate": None},
                ".svg": {"Date": None}}.get(path.suffix.lower())
    with matplotlib.rc_context({"svg.hashsalt": "poscasimir"}):
        fig.savefig(path, metadata=metadata)
    plt.close(fig)
    return path
