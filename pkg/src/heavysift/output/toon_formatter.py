"""TOON formatter for compact output.

Encodes reports as TOON (Token-Oriented Object Notation), which is much
shorter than JSON for the long uniform row lists sweeps produce.
"""

from typing import Any

from toon_format import encode

from heavysift.output.json_formatter import prepare_value


def format_toon(report: dict[str, Any]) -> str:
    """Format a report as TOON.

    Null fields are dropped; everything else is converted as for JSON.

    Args:
        report: Report dictionary

    Returns:
        TOON string
    """
    return encode(_strip_nulls(prepare_value(report)))


def _strip_nulls(data: Any) -> Any:
    """Remove None values from dictionaries, recursively."""
    if isinstance(data, dict):
        return {key: _strip_nulls(value) for key, value in data.items() if value is not None}
    if isinstance(data, list):
        return [_strip_nulls(item) for item in data]
    return data
