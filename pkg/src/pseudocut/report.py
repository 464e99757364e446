"""Render experiment results: summary table plus figures.

Reads the records CSV written by the experiment runner and produces, in an
output directory, ``summary.csv`` (mean/std cost per algorithm and sweep
point) and matplotlib figures ``cost_vs_<sweep>.png`` and
``size_vs_<sweep>.png`` with one errorbar series per algorithm.
"""

from __future__ import annotations

import csv
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .errors import InputError
from .experiment import RunRecord, format_summary_csv, summarize


def read_records_csv(path) -> tuple[list[RunRecord], str]:
    """Parse a records CSV; returns the records and the sweep variable name."""
    sweep = None
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for token in line[1:].split():
                    if token.startswith("sweep="):
                        sweep = token.split("=", 1)[1]
                continue
            rows.append(line)
    if not rows:
        raise InputError(f"no data rows in {path}")
    reader = csv.DictReader(rows)
    records = []
    for row in reader:
        records.append(
            RunRecord(
                algorithm=row["algorithm"],
                k=int(row["k"]),
                T=float(row["T"]),
                zeta=float(row["zeta"]),
                scheme=row["scheme"],
                draw=int(row["draw"]),
                cost=float(row["cost"]),
                size=int(row["size"]),
                feasible=row["feasible"] == "True",
                elapsed_ms=int(row["elapsed_ms"]),
                status=row["status"],
            )
        )
    if sweep is None:
        # Fall back to the column with more than one distinct value.
        for cand in ("k", "T", "zeta"):
            if len({getattr(r, cand) for r in records}) > 1:
                sweep = cand
                break
        else:
            sweep = "k"
    return records, sweep


def _series(summary: list[dict], sweep: str):
    by_algo: dict[str, list[dict]] = {}
    for row in summary:
        by_algo.setdefault(row["algorithm"], []).append(row)
    for rows in by_algo.values():
        rows.sort(key=lambda r: r[sweep])
    return by_algo


def render_report(records_csv, outdir, sweep: str | None = None) -> list[str]:
    """Write summary.csv and the figures; returns the created file paths."""
    records, detected = read_records_csv(records_csv)
    sweep = sweep or detected
    summary = summarize(records, sweep)
    os.makedirs(outdir, exist_ok=True)
    written = []

    summary_path = os.path.join(outdir, "summary.csv")
    with open(summary_path, "w", encoding="utf-8") as fh:
        fh.write(format_summary_csv(summary, sweep))
    written.append(summary_path)

    by_algo = _series(summary, sweep)
    for metric, ylabel, fname in (
        ("mean_cost", "solution cost", f"cost_vs_{sweep}.png"),
        ("mean_size", "solution size", f"size_vs_{sweep}.png"),
    ):
        fig, ax = plt.subplots(figsize=(6, 4))
        for algo, rows in sorted(by_algo.items()):
            xs = [r[sweep] for r in rows if not math.isnan(r[metric])]
            ys = [r[metric] for r in rows if not math.isnan(r[metric])]
            if not xs:
                continue
            if metric == "mean_cost":
                errs = [r["std_cost"] for r in rows if not math.isnan(r[metric])]
                ax.errorbar(xs, ys, yerr=errs, marker="o", capsize=3, label=algo)
            else:
                ax.plot(xs, ys, marker="o", label=algo)
        ax.set_xlabel(sweep)
        ax.set_ylabel(ylabel)
        ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        path = os.path.join(outdir, fname)
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
