"""CSV renderers for verification reports and the Fredholm table"""

import csv
import io
from typing import Optional, Sequence

from edgecalc.edge_kernel.fredholm import FredholmData
from edgecalc.schemas import Report

REPORT_COLUMNS = ["command", "check", "status", "value", "tolerance", "detail"]
TABLE_COLUMNS = [
    "gamma",
    "dim_ker",
    "dim_coker",
    "index",
    "fredholm_ok",
    "kernel_sectors",
    "cokernel_sectors",
]


def _number(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


def render(report: Report) -> str:
    """
    Render a report as CSV, one row per check

    Returns:
        CSV string
    """
    output = io.StringIO()
    writer = csv.DictWriter(output, fieldnames=REPORT_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in report.records:
        writer.writerow(
            {
                "command": record.command,
                "check": record.name,
                "status": record.status.value,
                "value": _number(record.value),
                "tolerance": _number(record.tolerance),
                "detail": record.detail,
            }
        )
    return output.getvalue()


def render_fredholm_table(table: Sequence[FredholmData]) -> str:
    """Plot-ready Fredholm table; sector lists are space separated"""
    output = io.StringIO()
    writer = csv.DictWriter(output, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in table:
        writer.writerow(
            {
                "gamma": repr(row.gamma),
                "dim_ker": row.dim_ker,
                "dim_coker": row.dim_coker,
                "index": row.index,
                "fredholm_ok": str(row.fredholm_ok).lower(),
                "kernel_sectors": " ".join(str(l) for l in row.kernel_sectors),
                "cokernel_sectors": " ".join(str(l) for l in row.cokernel_sectors),
            }
        )
    return output.getvalue()
