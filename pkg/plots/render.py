#!/usr/bin/env python3
"""Render harness CSVs into figures.

Two kinds, one figure per invocation:

- ``success-curves``: success rate versus clique size, one panel per mean
  degree, one curve per method, y fixed to [0, 1].  Input: the sweep CSV
  (columns n,d,mu,r,k,trials,skipped,method,success_rate,mean_N,master_seed).
- ``phase-diagram``: the (mu, k) plane colored by verdict on log-log axes,
  one panel per algorithm.  Input: the verdict CSV (columns
  n,d,mu,k,alpha,T,t,vd_verdict,cn_verdict).

Output is a PNG (or any extension matplotlib recognizes); rendering is a
pure function of the CSV, with fixed styles and no timestamps, so re-running
reproduces the file byte for byte.

    python plots/render.py --kind success-curves --input rates.csv --output rates.png
"""

import argparse
import csv
import math
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

SUCCESS_COLUMNS = ("mu", "k", "method", "success_rate")
PHASE_COLUMNS = ("mu", "k", "vd_verdict", "cn_verdict")

VERDICT_COLORS = {
    "SUCCESS": "#2e8b57",    # green: exact recovery guaranteed
    "FAIL": "#c0392b",       # red: recovery provably breaks down
    "UNKNOWN": "#f0e0c0",    # beige: no guarantee either way
    "ILL_POSED": "#9e9e9e",  # gray: parameters outside the model domain
}
METHOD_COLORS = {"VD": "#e07b39", "CN": "#2a6fb0"}


class SchemaError(ValueError):
    """The CSV lacks columns the figure needs."""


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    kind: str  # success-curves | phase-diagram
    output: str
    loglog: bool = True  # honored by phase diagrams; curves use linear axes


def _read_rows(path, required):
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [name for name in required if name not in header]
        if missing:
            raise SchemaError(f"missing columns: {', '.join(missing)}")
        return list(reader)


def load_success_table(path):
    """Sweep CSV -> {mu: {method: [(k, rate), ...]}} with k ascending."""
    rows = _read_rows(path, SUCCESS_COLUMNS)
    table = {}
    for row in rows:
        mu = float(row["mu"])
        rate = float(row["success_rate"])
        table.setdefault(mu, {}).setdefault(row["method"], []).append(
            (float(row["k"]), rate))
    for methods in table.values():
        for points in methods.values():
            points.sort()
    return table


def load_phase_table(path):
    """Verdict CSV -> (mu_values, k_values, {algorithm: verdict grid})."""
    rows = _read_rows(path, PHASE_COLUMNS)
    mu_values = sorted({float(row["mu"]) for row in rows})
    k_values = sorted({float(row["k"]) for row in rows})
    mu_index = {mu: i for i, mu in enumerate(mu_values)}
    k_index = {k: i for i, k in enumerate(k_values)}
    grids = {
        "VD": np.full((len(k_values), len(mu_values)), "UNKNOWN", dtype=object),
        "CN": np.full((len(k_values), len(mu_values)), "UNKNOWN", dtype=object),
    }
    for row in rows:
        col = mu_index[float(row["mu"])]
        line = k_index[float(row["k"])]
        grids["VD"][line, col] = row["vd_verdict"]
        grids["CN"][line, col] = row["cn_verdict"]
    return mu_values, k_values, grids


def render(spec):
    """Render the figure described by ``spec`` and write it to spec.output."""
    if spec.kind == "success-curves":
        figure = _success_curves_figure(load_success_table(spec.input_csv))
    elif spec.kind == "phase-diagram":
        figure = _phase_diagram_figure(*load_phase_table(spec.input_csv),
                                       loglog=spec.loglog)
    else:
        raise ValueError(f"unknown figure kind: {spec.kind}")
    figure.savefig(spec.output, dpi=150)
    plt.close(figure)
    return spec.output


def _success_curves_figure(table):
    mu_values = sorted(table)
    figure, axes = plt.subplots(
        len(mu_values), 1, figsize=(6.4, 2.6 * len(mu_values)),
        sharex=True, squeeze=False)
    for ax, mu in zip(axes[:, 0], mu_values):
        for method in sorted(table[mu]):
            points = table[mu][method]
            ks = [k for k, _ in points]
            rates = [rate for _, rate in points]
            ax.plot(ks, rates, marker="o", markersize=4,
                    color=METHOD_COLORS.get(method, "#555555"), label=method)
        ax.set_ylim(-0.03, 1.03)
        ax.set_ylabel("success rate")
        ax.set_title(f"mean degree {mu:g}", fontsize=10)
        ax.grid(alpha=0.3)
        ax.legend(loc="center right", fontsize=9)
    axes[-1, 0].set_xlabel("planted clique size k")
    figure.tight_layout()
    return figure


def _cell_boundaries(values):
    # geometric cell edges around log-spaced sample points
    values = np.asarray(values, dtype=float)
    if values.size == 1:
        return np.array([values[0] / 1.5, values[0] * 1.5])
    inner = np.sqrt(values[:-1] * values[1:])
    first = values[0] * values[0] / inner[0]
    last = values[-1] * values[-1] / inner[-1]
    return np.concatenate([[first], inner, [last]])


def _phase_diagram_figure(mu_values, k_values, grids, loglog=True):
    order = ["SUCCESS", "FAIL", "UNKNOWN", "ILL_POSED"]
    level = {name: i for i, name in enumerate(order)}
    cmap = matplotlib.colors.ListedColormap([VERDICT_COLORS[name] for name in order])
    figure, axes = plt.subplots(1, 2, figsize=(10.0, 4.2), sharey=True)
    for ax, algorithm in zip(axes, ("VD", "CN")):
        coded = np.vectorize(level.__getitem__)(grids[algorithm]).astype(float)
        ax.pcolormesh(_cell_boundaries(mu_values), _cell_boundaries(k_values),
                      coded, cmap=cmap, vmin=-0.5, vmax=len(order) - 0.5)
        if loglog:
            ax.set_xscale("log")
            ax.set_yscale("log")
        ax.set_xlabel("mean degree")
        ax.set_title(f"{algorithm} recovery", fontsize=10)
    axes[0].set_ylabel("planted clique size k")
    handles = [plt.Rectangle((0, 0), 1, 1, color=VERDICT_COLORS[name])
               for name in order]
    figure.legend(handles, [name.replace("_", "-").lower() for name in order],
                  loc="lower center", ncol=len(order), fontsize=9, frameon=False)
    figure.tight_layout(rect=(0.0, 0.07, 1.0, 1.0))
    return figure


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kind", required=True,
                        choices=("success-curves", "phase-diagram"))
    parser.add_argument("--input", required=True, help="harness CSV path")
    parser.add_argument("--output", required=True, help="image path")
    parser.add_argument("--loglog", action=argparse.BooleanOptionalAction,
                        default=True, help="log-log axes for phase diagrams")
    args = parser.parse_args(argv)
    spec = PlotSpec(input_csv=args.input, kind=args.kind, output=args.output,
                    loglog=args.loglog)
    try:
        render(spec)
    except SchemaError as exc:
        print(f"[schema-error] {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"[io-error] {exc}", file=sys.stderr)
        return 1
    print(f"wrote {spec.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
