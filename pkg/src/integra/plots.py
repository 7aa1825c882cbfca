"""Matplotlib figure rendering for plot-data tables and suite reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_plot_data(xs, values, record_id: str, path: str):
    """Two stacked panels: Re f(x) and Im f(x) over the sample grid."""
    re = [v.real for v in values]
    im = [v.imag for v in values]
    fig, (ax_re, ax_im) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    ax_re.plot(xs, re, lw=1.2, color="#1f4e9c")
    ax_re.set_ylabel("Re f(x)")
    ax_re.grid(alpha=0.3)
    ax_im.plot(xs, im, lw=1.2, color="#9c2f1f")
    ax_im.set_ylabel("Im f(x)")
    ax_im.set_xlabel("x")
    ax_im.grid(alpha=0.3)
    ax_re.set_title(record_id)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_suite_chart(reports, path: str):
    """Horizontal bar chart of per-record relative discrepancy."""
    ids = [r.id for r in reports]
    errs = [
        r.rel_err if (r.rel_err == r.rel_err and r.rel_err > 0) else 1e-17
        for r in reports
    ]
    colors = {"pass": "#2f7d32", "fail": "#b2271f",
              "skipped": "#b8860b", "error": "#5c5c5c"}
    bar_colors = [colors[r.status_kind] for r in reports]
    height = max(3.0, 0.22 * len(ids))
    fig, ax = plt.subplots(figsize=(8, height))
    ax.barh(range(len(ids)), [math.log10(e) + 17.0 for e in errs],
            color=bar_colors)
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids, fontsize=6)
    ax.invert_yaxis()
    ticks = range(0, 18, 2)
    ax.set_xticks(list(ticks))
    ax.set_xticklabels([f"1e{t - 17:d}" for t in ticks], fontsize=7)
    ax.set_xlabel("relative discrepancy between computed sides")
    ax.grid(axis="x", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
