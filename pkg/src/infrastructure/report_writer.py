"""
Rendering of RunReports: human-readable tables, JSON, CSV and the quadrant plot.
"""
import csv
import io
import logging
from pathlib import Path
from typing import Any, Iterable, List, Sequence

import tabulate

from src.api.schemas import RunReport

logger = logging.getLogger(__name__)


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.3f}"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return str(value)


def render_table(report: RunReport) -> str:
    """Results as a key/value grid followed by the expectation matrix."""
    parts = [f"{report.command}"]
    if report.results:
        rows = [(key, _cell(value)) for key, value in report.results.items() if not isinstance(value, dict)]
        parts.append(tabulate.tabulate(rows, headers=["quantity", "value"], tablefmt="simple"))
        for key, value in report.results.items():
            if isinstance(value, dict):
                sub = [(k, _cell(v)) for k, v in value.items()]
                parts.append(f"\n{key}:\n" + tabulate.tabulate(sub, tablefmt="simple"))
    if report.expectations:
        rows = [(e.name, _cell(e.expected), _cell(e.actual), "PASS" if e.passed else "FAIL")
                for e in report.expectations]
        parts.append(tabulate.tabulate(rows, headers=["check", "expected", "actual", "result"], tablefmt="simple"))
        passed = sum(e.passed for e in report.expectations)
        parts.append(f"{passed}/{len(report.expectations)} checks passed")
    if report.timings:
        total = sum(report.timings.values())
        parts.append(f"wall-clock {total:.2f} s")
    return "\n\n".join(parts)


def render_json(report: RunReport) -> str:
    return report.to_json()


def render(report: RunReport, as_json: bool = False) -> str:
    return render_json(report) if as_json else render_table(report)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(csv_text(header, rows), encoding="utf-8")
    logger.info("wrote %s", path)


def plot_quadrant(scan, img_path: Path, title: str = "") -> None:
    """
    Scatter of the scanned (b, c) points with the quadrant edges
    c - c_min = +-(b - b_min) and the MFW region boundaries.
    """
    import matplotlib
    matplotlib.use("Agg")
    from matplotlib import pyplot as plt

    inside = [p for p in scan.points if p.in_quadrant and p.in_mfw_region]
    outside = [p for p in scan.points if not (p.in_quadrant and p.in_mfw_region)]
    b_max = max(p.b for p in scan.points)
    bs: List[int] = list(range(scan.b_min, b_max + 1))

    fig, ax = plt.subplots(figsize=(6, 5), dpi=150)
    ax.plot(bs, [scan.c_min + (b - scan.b_min) for b in bs], color="grey", linestyle="--", label="quadrant")
    ax.plot(bs, [scan.c_min - (b - scan.b_min) for b in bs], color="grey", linestyle="--")
    ax.plot(bs, [b + scan.d_minus - 1 for b in bs], color="tab:blue", linewidth=0.8, label="MFW region")
    ax.plot(bs, [-b + scan.d_plus + 1 for b in bs], color="tab:blue", linewidth=0.8)
    ax.scatter([p.b for p in inside], [p.c for p in inside], color="tab:green", zorder=3, label="representatives")
    if outside:
        ax.scatter([p.b for p in outside], [p.c for p in outside], color="tab:red", marker="x", zorder=3,
                   label="outside")
    ax.set_xlabel("b (strands)")
    ax.set_ylabel("c (exponent sum)")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)

    plt.tight_layout()
    plt.savefig(img_path, bbox_inches="tight")
    plt.close(fig)
    logger.info("wrote quadrant plot %s", img_path)
