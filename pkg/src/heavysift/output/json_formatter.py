"""JSON formatter for reports.

Fractions are emitted as "p/q" strings so exact values survive the round trip.
"""

import json
from typing import Any

from heavysift.utils.numbers import format_value


def format_json(report: dict[str, Any]) -> str:
    """Format a report as pretty-printed JSON.

    Args:
        report: Report dictionary

    Returns:
        JSON string with 2-space indentation
    """
    return json.dumps(prepare_value(report), indent=2, ensure_ascii=False)


def prepare_value(value: Any) -> Any:
    """Convert a report value into plain JSON types.

    Tuples become lists, sets become sorted lists and Fractions become strings.
    """
    if isinstance(value, dict):
        return {str(key): prepare_value(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [prepare_value(item) for item in value]
    if isinstance(value, set | frozenset):
        return [prepare_value(item) for item in sorted(value)]
    return format_value(value)
