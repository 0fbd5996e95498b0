"""Figure rendering for drawings and lower-bound reports.

Presentation only: nothing here is ever parsed back.  matplotlib is imported
lazily with the Agg backend so library use stays headless and import-light.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .exact import Point
from .lowerbound import LowerBoundReport


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_drawing_figure(
    points: Sequence[Point],
    target,
    fmt: Optional[str] = None,
    slab: bool = False,
    title: Optional[str] = None,
) -> None:
    """Scatter the drawing to ``target`` (path or file object).

    y switches to symlog once coordinates pass 10^4, otherwise large drawings
    collapse into a line.  With ``slab`` the two slab boundary verticals are
    overlaid (needs at least 4 points).
    """
    plt = _plt()
    xs = [float(x) for x, _ in points]
    ys = [float(y) for _, y in points]
    fig, ax = plt.subplots(figsize=(8.0, 5.0))
    ax.scatter(xs, ys, s=22, color="#1f4e79", zorder=3)
    if max((abs(y) for y in ys), default=0.0) > 1e4:
        ax.set_yscale("symlog")
    if slab:
        from .lowerbound import slab_bounds

        lo, hi = slab_bounds(points)
        ax.axvspan(float(lo), float(hi), color="#f2c744", alpha=0.25, zorder=1)
        ax.axvline(float(lo), color="#b8860b", linestyle="--", linewidth=1)
        ax.axvline(float(hi), color="#b8860b", linestyle="--", linewidth=1)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    if title:
        ax.set_title(title)
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(target, format=fmt)
    plt.close(fig)


def _flog2(value) -> Optional[float]:
    num, den = value.numerator, value.denominator
    if num <= 0:
        return None
    return math.log2(num) - math.log2(den)


def save_report_figure(report: LowerBoundReport, target, fmt: Optional[str] = None) -> None:
    """Per-level girth/width growth on a log2 scale, against the drawing size."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(8.0, 5.0))
    series = [
        ("min girth at l1", [(ls.level, ls.girth1_min) for ls in report.levels]),
        ("min girth at l4", [(ls.level, ls.girth4_min) for ls in report.levels]),
        ("max width at l1", [(ls.level, ls.width1_max) for ls in report.levels]),
        ("max width at l4", [(ls.level, ls.width4_max) for ls in report.levels]),
    ]
    for label, data in series:
        lv = [l for l, v in data if v is not None and _flog2(v) is not None]
        vals = [_flog2(v) for _, v in data if v is not None and _flog2(v) is not None]
        if lv:
            ax.plot(lv, vals, marker="o", label=label)
    ax.axhline(math.log2(report.size), color="black", linestyle=":", label="log2 size")
    ax.set_xlabel("tree level")
    ax.set_ylabel("log2 of vertical distance")
    ax.set_title(f"girth/width growth, n={report.n}, t={report.t}")
    ax.legend(fontsize=8)
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(target, format=fmt)
    plt.close(fig)
