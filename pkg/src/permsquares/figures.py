"""Census figures written next to the delimited output of ``census``."""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .counting import CensusReport, census  # noqa: E402

SERIES = ("EE1", "EE2", "EE3", "alpha")
COLORS = {"EE1": "tab:blue", "EE2": "tab:orange", "EE3": "tab:green", "alpha": "black"}


def plot_census(reports: Sequence[CensusReport], path, title: str | None = None):
    """Two panels: class sizes on a log scale, and the odd/even ratios.

    The right panel plots |X_{2n+1}| / |X_{2n}| against 2n+1 for every pair of
    consecutive sizes in ``reports`` (completed from the partition backend when
    one side is missing), with the line y = x for reference.
    """
    reports = sorted(reports, key=lambda r: r.n)
    fig, (ax_counts, ax_ratio) = plt.subplots(1, 2, figsize=(9.0, 3.6))

    ns = [r.n for r in reports]
    for key in SERIES:
        ys = [math.log10(r[key]) if r[key] else float("nan") for r in reports]
        ax_counts.plot(ns, ys, marker="o", ms=3, lw=1, color=COLORS[key], label=key)
    ax_counts.set_xlabel("n")
    ax_counts.set_ylabel("log10 count")
    ax_counts.legend(frameon=False, fontsize=8)

    odd = sorted({r.n if r.n % 2 else r.n + 1 for r in reports if r.n >= 2})
    odd = [m for m in odd if m >= 3]
    for key in SERIES:
        ratios = []
        for m in odd:
            small = census(m - 1)[key]
            ratios.append(census(m)[key] / small if small else float("nan"))
        ax_ratio.plot(odd, ratios, marker="s", ms=3, lw=0, color=COLORS[key], label=key)
    if odd:
        ax_ratio.plot(odd, odd, color="0.6", lw=0.8, ls="--", label="2n+1")
    ax_ratio.set_xlabel("2n+1")
    ax_ratio.set_ylabel("|X(2n+1)| / |X(2n)|")
    ax_ratio.legend(frameon=False, fontsize=8)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
