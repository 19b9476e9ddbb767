"""JSON structure documents.

A document looks like ``{"order": 2, "table": [[[0],[0]],[[0],[0]]], "name": "Z2"}``
where ``table[x][y]`` lists the members of ``x o y`` in strictly increasing
order.  ``name`` is optional.
"""
from __future__ import annotations

import json
from typing import Optional

from .errors import EmptyCell, HyperError, OutOfRange, ParseError
from .hypercore import HyperTable, validate_table


def serialize_structure(H: HyperTable, name: Optional[str] = None) -> str:
    """Compact one-line document; cells are always sorted."""
    doc = {"order": H.order, "table": H.rows()}
    if name is not None:
        doc["name"] = name
    return json.dumps(doc, separators=(",", ":"))


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def _locate_cell(text: str, x: int, y: int) -> Optional[int]:
    """Offset of the ``[`` opening ``table[x][y]``, found by bracket counting."""
    key = text.find('"table"')
    if key < 0:
        return None
    start = text.find("[", key)
    if start < 0:
        return None
    depth = 0
    row = col = -1
    for i in range(start, len(text)):
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 2:
                row += 1
                col = -1
            elif depth == 3:
                col += 1
                if row == x and col == y:
                    return i
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return None
    return None


def _cell_error(text: str, x: int, y: int, message: str) -> ParseError:
    off = _locate_cell(text, x, y)
    if off is None:
        return ParseError(message)
    return ParseError(message, *_line_col(text, off))


def parse_structure(text: str) -> HyperTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", 1, 1)
    unknown = set(doc) - {"order", "table", "name"}
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(sorted(unknown))}")
    order, table = doc.get("order"), doc.get("table")
    if not isinstance(order, int) or isinstance(order, bool):
        raise ParseError('"order" must be an integer')
    if not isinstance(table, list):
        raise ParseError('"table" must be an array')
    if len(table) != order:
        raise ParseError(f'"table" has {len(table)} rows but order is {order}')
    for x, row in enumerate(table):
        if not isinstance(row, list) or len(row) != order:
            raise ParseError(f"row {x} must be an array of {order} cells")
        for y, cell in enumerate(row):
            if not isinstance(cell, list):
                raise _cell_error(text, x, y, f"cell ({x},{y}) must be an array")
            for e in cell:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise _cell_error(text, x, y, f"cell ({x},{y}) holds non-integer {e!r}")
            if any(a >= b for a, b in zip(cell, cell[1:])):
                raise _cell_error(
                    text, x, y, f"cell ({x},{y}) is not strictly increasing (duplicates or unsorted)"
                )
    try:
        return validate_table(table)
    except (EmptyCell, OutOfRange) as e:
        off = _locate_cell(text, e.x, e.y)
        e.line, e.column = _line_col(text, off) if off is not None else (None, None)
        if off is not None:
            e.args = (f"line {e.line}, column {e.column}: {e}",)
        raise
    except HyperError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e
