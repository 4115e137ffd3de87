"""Exact rank of sparse integer matrices by fraction-free elimination."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

SparseRow = dict[int, int]


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        if v == 1 or v == -1:
            return row
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def _combine(pivot: SparseRow, row: SparseRow, col: int) -> SparseRow:
    """``pivot[col] * row - row[col] * pivot``; entry ``col`` cancels."""
    a, b = pivot[col], row[col]
    out = dict(row) if a == 1 else {k: a * v for k, v in row.items()}
    for k, v in pivot.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def echelon(rows: Iterable[Mapping[int, int]]) -> dict[int, SparseRow]:
    """Row echelon basis keyed by leading column.

    Every combination step is integer-only (cross multiplication followed by
    division by the row content), so entries never leave the integers.
    """
    pivots: dict[int, SparseRow] = {}
    for source in rows:
        row = {k: v for k, v in source.items() if v}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = _primitive(row)
                break
            row = _primitive(_combine(pivot, row, lead))
    return pivots


def rank(rows: Iterable[Mapping[int, int]]) -> int:
    return len(echelon(rows))
