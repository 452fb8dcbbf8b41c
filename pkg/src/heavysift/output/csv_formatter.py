"""CSV formatter for row-shaped reports.

Columns are always written in the order the subcommand declares.
"""

import csv
import io
from typing import Any

from heavysift.utils.numbers import format_value


def _cell(value: Any) -> Any:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, list | tuple | set | frozenset):
        items = sorted(value) if isinstance(value, set | frozenset) else value
        return ' '.join(str(format_value(item)) for item in items)
    return format_value(value)


def format_csv(rows: list[dict[str, Any]], columns: tuple[str, ...]) -> str:
    """Format rows as CSV with a header line.

    Args:
        rows: One dict per row; keys outside ``columns`` are ignored
        columns: Column order

    Returns:
        CSV text using '\\n' line endings
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()
