"""Render evaluation-report figures to image files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .metrics import EvalReport


def save_report_figures(report: EvalReport, directory: str | Path) -> list[Path]:
    """Write the standard figure set for a report; returns the file paths."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = [
        _classification_figure(report, out / "classification_metrics.png"),
        _confusion_figure(report, out / "confusion_matrix.png"),
        _suite_accuracy_figure(report, out / "suite_accuracy.png"),
    ]
    return paths


def _classification_figure(report: EvalReport, path: Path) -> Path:
    classes = ["causal", "non_causal"]
    metrics = ["precision", "recall", "f1"]
    values = np.array(
        [
            [getattr(report.classification.per_class[c], m) for m in metrics]
            for c in classes
        ]
    )
    x = np.arange(len(metrics))
    width = 0.35
    fig, ax = plt.subplots(figsize=(6, 4))
    for i, cls in enumerate(classes):
        ax.bar(x + (i - 0.5) * width, values[i], width, label=cls.replace("_", "-"))
    ax.axhline(report.classification.macro_f1, color="grey", linestyle="--", linewidth=1)
    ax.text(
        x[-1] + width,
        report.classification.macro_f1,
        f"macro F1 = {report.classification.macro_f1:.3f}",
        va="bottom",
        ha="right",
        fontsize=9,
    )
    ax.set_xticks(x, metrics)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("score")
    ax.set_title("Classification metrics per class")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _confusion_figure(report: EvalReport, path: Path) -> Path:
    conf = report.classification.confusion
    matrix = np.array([[conf["tp"], conf["fn"]], [conf["fp"], conf["tn"]]])
    fig, ax = plt.subplots(figsize=(4.5, 4))
    im = ax.imshow(matrix, cmap="Blues")
    for (i, j), value in np.ndenumerate(matrix):
        ax.text(j, i, str(value), ha="center", va="center", fontsize=14)
    ax.set_xticks([0, 1], ["predicted causal", "predicted non-causal"])
    ax.set_yticks([0, 1], ["gold causal", "gold non-causal"])
    ax.set_title("Confusion matrix")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _suite_accuracy_figure(report: EvalReport, path: Path) -> Path:
    s = report.suites
    labels = [
        "variables\n(per sentence)",
        "variables\n(micro)",
        "configurations\n(per sentence)",
        "configurations\n(micro)",
    ]
    values = [
        s.variable_accuracy,
        s.variable_accuracy_micro,
        s.configuration_accuracy,
        s.configuration_accuracy_micro,
    ]
    fig, ax = plt.subplots(figsize=(6, 4))
    bars = ax.bar(labels, values, color=["#c44", "#d88", "#46a", "#8ac"])
    ax.bar_label(bars, fmt="%.3f")
    ax.set_ylim(0, 1.1)
    ax.set_ylabel("accuracy")
    ax.set_title(f"Suite accuracy over {s.evaluated} causal entries")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
