"""Figure rendering for experiment outputs.

Each writer takes already-computed results and saves one PNG next to the
CSV/JSON files; the delimited outputs stay the canonical record.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

if TYPE_CHECKING:  # pragma: no cover
    from .measures import MeasureReport
    from .training import MultiSeedStats, TrainingTrace

_DPI = 150


def plot_trace(trace: "TrainingTrace", path: str, title: str = "") -> None:
    """Loss/MW curves plus any tracked negativity series for a single run."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(trace.epochs, trace.loss, label="loss", color="tab:red")
    ax.plot(trace.epochs, trace.mw, label="MW", color="tab:blue")
    for part, series in sorted(trace.negativity.items(), key=lambda kv: kv[0].side_b):
        if series:
            xs = sorted(series)
            ax.plot(xs, [series[x] for x in xs], label=f"neg {part.label()}", alpha=0.8)
    ax.set_xlabel("epoch")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def plot_seed_stats(stats: "MultiSeedStats", path: str, title: str = "") -> None:
    """Mean and one-sigma band per logged quantity over the seed ensemble."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for curve, label, color in (
        (stats.loss, "loss", "tab:red"),
        (stats.mw, "MW", "tab:blue"),
    ):
        ax.plot(curve.epochs, curve.mean, label=label, color=color)
        ax.fill_between(
            curve.epochs, curve.mean - curve.std, curve.mean + curve.std, color=color, alpha=0.2
        )
    for part, curve in sorted(stats.negativity.items(), key=lambda kv: kv[0].side_b):
        line = ax.plot(curve.epochs, curve.mean, label=f"neg {part.label()}", alpha=0.9)[0]
        ax.fill_between(
            curve.epochs,
            curve.mean - curve.std,
            curve.mean + curve.std,
            color=line.get_color(),
            alpha=0.15,
        )
    ax.set_xlabel("epoch")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def plot_histogram(
    bin_edges: Sequence[float], counts: Sequence[int], path: str, title: str = ""
) -> None:
    """Bar chart of final-loss counts over fixed-width bins."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    widths = [hi - lo for lo, hi in zip(bin_edges[:-1], bin_edges[1:])]
    ax.bar(bin_edges[:-1], counts, width=widths, align="edge", edgecolor="black", alpha=0.75)
    ax.set_xlabel("final loss")
    ax.set_ylabel("runs")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def plot_sweep(
    t_oscs: Sequence[float],
    means: Sequence[float],
    variances: Sequence[float],
    path: str,
    title: str = "",
) -> None:
    """Mean final loss against t_osc with standard-deviation error bars."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.errorbar(t_oscs, means, yerr=[v**0.5 for v in variances], fmt="o-", capsize=3)
    ax.set_xlabel("t_osc (t_int = 1)")
    ax.set_ylabel("mean final loss")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def plot_measure(report: "MeasureReport", path: str, title: str = "") -> None:
    """Negativity per bipartition against its ceiling, with MW in the title."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    parts = sorted(report.negativities, key=lambda p: p.side_b)
    xs = range(len(parts))
    ax.bar(xs, [report.negativities[p] for p in parts], width=0.6, label="negativity")
    ax.plot(
        xs,
        [report.bounds[p] for p in parts],
        "k_",
        markersize=24,
        label="bound",
    )
    ax.set_xticks(list(xs), [p.label() for p in parts])
    ax.set_ylabel("negativity")
    ax.set_title(title or f"MW = {report.mw:.4f}")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
