"""Exact rational rank by incremental sparse elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _sparse(row) -> dict[int, Fraction]:
    if isinstance(row, Mapping):
        items = row.items()
    else:
        items = enumerate(row)
    return {k: Fraction(v) for k, v in items if v != 0}


def rank(rows: Iterable[Sequence | Mapping]) -> int:
    """Rank over Q of a list of rows (dense sequences or sparse ``{col: value}`` maps)."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = _sparse(row)
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                break
            factor = r[lead] / p[lead]
            for k, v in p.items():
                nv = r.get(k, 0) - factor * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)
