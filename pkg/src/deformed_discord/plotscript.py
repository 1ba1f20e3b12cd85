"""Generate a standalone matplotlib script that draws a sweep CSV as three panels."""
from __future__ import annotations

import csv
import os

from .sweep import BASE_COLUMNS, ORACLE_COLUMNS


class MalformedCSV(ValueError):
    pass


_TEMPLATE = '''\
#!/usr/bin/env python3
"""Discord (solid) and entanglement of formation (dashed) versus mixing probability p.

Generated by ``deformed-discord plot-script``; reads {csv_name}.
"""
import csv
import sys
from collections import defaultdict

import matplotlib.pyplot as plt

CSV_PATH = {csv_path!r}
OUT_PATH = sys.argv[1] if len(sys.argv) > 1 else "sweep.png"
KAPPAS = {kappas!r}
COLORS = {{0.1: "tab:green", 0.5: "tab:purple", 1.0: "tab:red"}}
SHOW_DEVIATION = {show_dev!r}

curves = defaultdict(lambda: {{"p": [], "DC": [], "EoF": [], "DC_absdiff": []}})
with open(CSV_PATH, newline="") as fh:
    for row in csv.DictReader(fh):
        if row["DC"] == "":
            continue
        key = (row["kappa"], float(row["alpha"]))
        curves[key]["p"].append(float(row["p"]))
        curves[key]["DC"].append(float(row["DC"]))
        curves[key]["EoF"].append(float(row["EoF"]))
        if SHOW_DEVIATION:
            curves[key]["DC_absdiff"].append(float(row["DC_absdiff"]))

nrows = 2 if SHOW_DEVIATION else 1
fig, axes = plt.subplots(nrows, len(KAPPAS), figsize=(4.5 * len(KAPPAS), 4.2 * nrows),
                         squeeze=False)
for col, kappa in enumerate(KAPPAS):
    ax = axes[0][col]
    for (k, alpha), c in sorted(curves.items()):
        if k != kappa:
            continue
        color = COLORS.get(alpha)
        ax.plot(c["p"], c["DC"], "-", color=color, label=f"DC, alpha={{alpha:g}}")
        ax.plot(c["p"], c["EoF"], "--", color=color, label=f"EoF, alpha={{alpha:g}}")
        if SHOW_DEVIATION:
            dev = [max(d, 1e-18) for d in c["DC_absdiff"]]
            axes[1][col].semilogy(c["p"], dev, color=color, label=f"alpha={{alpha:g}}")
    ax.set_title(f"kappa = {{kappa}}")
    ax.set_xlabel("p")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.02)
    if col == 0:
        ax.set_ylabel("bits")
        ax.legend(fontsize=7)
    if SHOW_DEVIATION:
        axes[1][col].set_xlabel("p")
        axes[1][col].set_ylabel("|DC - DC_numeric|")
fig.tight_layout()
fig.savefig(OUT_PATH, dpi=150)
print(f"wrote {{OUT_PATH}}")
'''


def read_sweep_csv(path: str) -> tuple[list[str], list[dict]]:
    if not os.path.exists(path):
        raise MalformedCSV(f"no such file: {path}")
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        rows = list(reader)
    if not header:
        raise MalformedCSV(f"{path} is empty")
    missing = [c for c in BASE_COLUMNS if c not in header]
    if missing:
        raise MalformedCSV(f"{path} lacks columns: {', '.join(missing)}")
    if not rows:
        raise MalformedCSV(f"{path} has a header but no data rows")
    return list(header), rows


def plot_script(csv_path: str) -> str:
    """Return the text of a plotting script for the sweep stored at ``csv_path``."""
    header, rows = read_sweep_csv(csv_path)
    kappas = []
    for r in rows:
        if r["kappa"] not in kappas:
            kappas.append(r["kappa"])
    show_dev = all(c in header for c in ORACLE_COLUMNS)
    return _TEMPLATE.format(
        csv_name=os.path.basename(csv_path),
        csv_path=os.path.abspath(csv_path),
        kappas=kappas,
        show_dev=show_dev,
    )
