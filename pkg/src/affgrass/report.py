"""Exploratory report: hexagonal exchange scan and chamber maxima census.

The hexagonal pattern has no verified wall list, so its scan results are
data to look at rather than properties to assert.  The same goes for the
count of maximal elements per chamber.  This module writes both as CSV,
renders summary figures next to them, and collects anything surprising
into a findings log.  Nothing here fails the build; surprises are logged.
"""

from __future__ import annotations

import csv
import os
from collections import Counter
from itertools import product
from typing import NamedTuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .polytope import chamber_maxima
from .psi import psi_infinity
from .rootsys import root_system
from .rops import braid_check, braid_pairs, critical_lines


class ReportPaths(NamedTuple):
    scan_csv: str
    census_csv: str
    scan_figure: str
    census_figure: str
    findings_path: str
    findings: tuple[str, ...]


BUCKET_COLORS = {
    "equal": "#2a9d4e",
    "unequal-on-critical-line": "#e09f3e",
    "unequal-elsewhere": "#c1121f",
}

CENSUS_TYPES = ("A2", "B2")


def _bucket(rep):
    if rep.equal:
        return "equal"
    if rep.critical_lines_hit:
        return "unequal-on-critical-line"
    return "unequal-elsewhere"


def _fmt(vec):
    return ",".join(str(c) for c in vec)


def write_hexagonal_scan(out_dir: str, radius: int = 6):
    """CSV of every pattern check in the box, one row per coweight and pair."""
    rs = root_system("G2")
    rows = []
    findings = []
    for lam in product(range(-radius, radius + 1), repeat=2):
        for kind, alpha, beta in braid_pairs(rs):
            rep = braid_check(rs, lam, alpha, beta)
            bucket = _bucket(rep)
            rows.append(
                {
                    "lam": _fmt(lam),
                    "alpha": _fmt(alpha),
                    "beta": _fmt(beta),
                    "kind": kind,
                    "pairing_alpha": rs.pair(lam, alpha),
                    "pairing_beta": rs.pair(lam, beta),
                    "lhs": _fmt(rep.lhs),
                    "rhs": _fmt(rep.rhs),
                    "bucket": bucket,
                }
            )
            if bucket == "unequal-elsewhere":
                findings.append(
                    f"hexagonal inequality off the listed walls: lam={lam} "
                    f"pair=({_fmt(alpha)};{_fmt(beta)}) kind={kind} "
                    f"lhs={rep.lhs} rhs={rep.rhs}"
                )
    path = os.path.join(out_dir, "hexagonal_scan.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    return path, rows, findings


def plot_hexagonal_scan(out_dir: str, rows, radius: int = 6):
    """Scatter of the full-pattern pair, colored by scan bucket."""
    rs = root_system("G2")
    hexagonal = [
        (kind, alpha, beta)
        for kind, alpha, beta in braid_pairs(rs)
        if kind == "G2"
    ][0]
    _, alpha, beta = hexagonal
    key_a, key_b = _fmt(alpha), _fmt(beta)
    fig, ax = plt.subplots(figsize=(7, 6))
    for bucket, color in BUCKET_COLORS.items():
        xs = [
            int(r["lam"].split(",")[0])
            for r in rows
            if r["bucket"] == bucket and r["alpha"] == key_a and r["beta"] == key_b
        ]
        ys = [
            int(r["lam"].split(",")[1])
            for r in rows
            if r["bucket"] == bucket and r["alpha"] == key_a and r["beta"] == key_b
        ]
        ax.scatter(xs, ys, c=color, s=36, label=f"{bucket} ({len(xs)})")
    for vec, k in critical_lines("G2", alpha, beta):
        # draw the affine wall <lam, vec> = k over the box
        if vec[1] != 0:
            xs = [x / 4 for x in range(-4 * radius, 4 * radius + 1)]
            ys = [(k - vec[0] * x) / vec[1] for x in xs]
        else:
            ys = [y / 4 for y in range(-4 * radius, 4 * radius + 1)]
            xs = [k / vec[0] for _ in ys]
        ax.plot(xs, ys, "k--", linewidth=1, alpha=0.6)
    ax.set_xlim(-radius - 0.5, radius + 0.5)
    ax.set_ylim(-radius - 0.5, radius + 0.5)
    ax.set_xlabel("first coordinate")
    ax.set_ylabel("second coordinate")
    ax.set_title("Hexagonal pattern exchange scan (dashed: listed walls)")
    ax.legend(loc="upper right", fontsize=8)
    path = os.path.join(out_dir, "hexagonal_scan.png")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path


def write_chamber_census(out_dir: str, radius: int = 3):
    """CSV counting the maximal elements of each chamber slice of each set."""
    rows = []
    findings = []
    for name in CENSUS_TYPES:
        rs = root_system(name)
        elements = rs.weyl_elements()
        for lam in product(range(-radius, radius + 1), repeat=rs.rank):
            for idx, y in enumerate(elements):
                maxima = sorted(chamber_maxima(rs, lam, y))
                rows.append(
                    {
                        "type": name,
                        "lam": _fmt(lam),
                        "chamber": idx,
                        "chamber_word": _fmt(rs.reduced_word(y)),
                        "count": len(maxima),
                        "maxima": ";".join(_fmt(m) for m in maxima),
                    }
                )
                if len(maxima) > 1:
                    findings.append(
                        f"several maximal elements in one chamber: type={name} "
                        f"lam={lam} chamber_word={rs.reduced_word(y)} "
                        f"maxima={maxima}"
                    )
    path = os.path.join(out_dir, "chamber_census.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    return path, rows, findings


def plot_chamber_census(out_dir: str, rows):
    """Histogram of maximal element counts per type."""
    fig, axes = plt.subplots(1, len(CENSUS_TYPES), figsize=(10, 4))
    for ax, name in zip(axes, CENSUS_TYPES):
        counts = Counter(r["count"] for r in rows if r["type"] == name)
        keys = sorted(counts)
        ax.bar([str(k) for k in keys], [counts[k] for k in keys],
               color="#457b9d")
        ax.set_title(f"{name}: chamber maxima counts")
        ax.set_xlabel("maximal elements per chamber")
        ax.set_ylabel("chamber slices")
    path = os.path.join(out_dir, "chamber_census.png")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path


def write_report(out_dir: str, scan_radius: int = 6,
                 census_radius: int = 3) -> ReportPaths:
    """Write both CSVs, both figures, and the findings log."""
    os.makedirs(out_dir, exist_ok=True)
    scan_csv, scan_rows, scan_findings = write_hexagonal_scan(
        out_dir, scan_radius)
    census_csv, census_rows, census_findings = write_chamber_census(
        out_dir, census_radius)
    scan_fig = plot_hexagonal_scan(out_dir, scan_rows, scan_radius)
    census_fig = plot_chamber_census(out_dir, census_rows)
    findings = tuple(scan_findings + census_findings)
    findings_path = os.path.join(out_dir, "findings.txt")
    with open(findings_path, "w") as fh:
        if findings:
            for line in findings:
                fh.write(line + "\n")
        else:
            fh.write("no findings\n")
    return ReportPaths(scan_csv, census_csv, scan_fig, census_fig,
                       findings_path, findings)
