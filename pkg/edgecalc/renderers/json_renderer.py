"""JSON renderer for verification reports"""

import json
import math
from typing import Any, Dict

from edgecalc.schemas import Report


def _finite(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_document(report: Report) -> Dict[str, Any]:
    """
    Report as a JSON-ready dictionary

    Non-finite measured values become null so the output stays strict JSON.
    """
    document = report.model_dump(mode="json")
    for record in document["records"]:
        record["value"] = _finite(record["value"])
        record["tolerance"] = _finite(record["tolerance"])
    return document


def render(report: Report) -> str:
    """
    Render a report as JSON

    Returns:
        JSON string with sorted keys; equal reports render to equal bytes apart from
        wall_time
    """
    return json.dumps(render_document(report), sort_keys=True, indent=2, allow_nan=False) + "\n"
