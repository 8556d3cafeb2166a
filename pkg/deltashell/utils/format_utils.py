from __future__ import annotations

from typing import Any, Sequence


def format_value(value: Any) -> str:
    """
    Format a report value for the terminal: floats to 12 significant digits, containers
    element by element.

    :param value: A JSON compatible value
    :return: The text form
    """
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(item) for item in value) + "]"
    if isinstance(value, dict):
        return ", ".join(f"{key}={format_value(item)}" for key, item in value.items())
    return str(value)


def format_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """
    Align rows under a header in columns separated by two spaces.
    """
    cells = [list(header)] + [[format_value(cell) for cell in row] for row in rows]
    widths = [max(len(row[column]) for row in cells) for column in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in cells
    )
