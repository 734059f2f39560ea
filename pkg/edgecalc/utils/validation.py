"""JSON Schema validation of rendered reports"""

import logging
from typing import Any, Dict, List

from jsonschema import Draft7Validator

from edgecalc.schemas import CheckStatus, Command

logger = logging.getLogger(__name__)

_NULLABLE_NUMBER = {"type": ["number", "null"]}

REPORT_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "config", "records", "summary", "wall_time"],
    "properties": {
        "command": {"type": "string", "enum": [c.value for c in Command]},
        "config": {"type": "object"},
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["command", "name", "status", "value", "tolerance", "detail"],
                "properties": {
                    "command": {"type": "string"},
                    "name": {"type": "string"},
                    "status": {"type": "string", "enum": [s.value for s in CheckStatus]},
                    "value": _NULLABLE_NUMBER,
                    "tolerance": _NULLABLE_NUMBER,
                    "detail": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "summary": {
            "type": "object",
            "required": [s.value for s in CheckStatus] + ["total"],
            "additionalProperties": {"type": "integer", "minimum": 0},
        },
        "wall_time": {"type": "number", "minimum": 0},
    },
}

Draft7Validator.check_schema(REPORT_SCHEMA)


def report_errors(data: Any) -> List[str]:
    """Messages for every schema violation of a report document, plus tally mismatches"""
    errors = [error.message for error in Draft7Validator(REPORT_SCHEMA).iter_errors(data)]
    if errors:
        return errors
    tallies = {status.value: 0 for status in CheckStatus}
    for record in data["records"]:
        tallies[record["status"]] += 1
    tallies["total"] = len(data["records"])
    for key, count in tallies.items():
        if data["summary"].get(key) != count:
            errors.append(f"summary[{key}]={data['summary'].get(key)} but records give {count}")
    if errors:
        logger.debug(f"Report fails validation: {errors}")
    return errors
