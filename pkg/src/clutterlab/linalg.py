"""Exact matrix rank over GF(2), GF(p) and the rationals.

Matrices are sparse: each row is a ``dict`` mapping column index to a nonzero
integer entry.  No floating point is used anywhere.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

Row = Mapping[int, int]


def rank_gf2(rows: Iterable[Row]) -> int:
    """Rank over GF(2), packing each row into an ``int`` and XOR-reducing."""
    pivots: dict[int, int] = {}
    for row in rows:
        vec = 0
        for col, val in row.items():
            if val & 1:
                vec ^= 1 << col
        while vec:
            lead = vec.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = vec
                break
            vec ^= piv
    return len(pivots)


def rank_mod_p(rows: Iterable[Row], p: int) -> int:
    """Rank over GF(p) by row reduction against monic pivot rows."""
    if p == 2:
        return rank_gf2(rows)
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        vec = {c: v % p for c, v in row.items() if v % p}
        while vec:
            lead = min(vec)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(vec[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in vec.items()}
                break
            factor = vec[lead]
            for c, v in piv.items():
                nv = (vec.get(c, 0) - factor * v) % p
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
    return len(pivots)


def rank_rational(rows: Iterable[Row]) -> int:
    """Rank over Q with fraction-free integer elimination.

    Every reduction step is ``a * row - b * pivot`` followed by division by the
    content (gcd of entries), so entries stay small integers.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        vec = {c: v for c, v in row.items() if v}
        while vec:
            lead = min(vec)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = vec
                break
            a, b = piv[lead], vec[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            merged = {}
            for c in vec.keys() | piv.keys():
                nv = a * vec.get(c, 0) - b * piv.get(c, 0)
                if nv:
                    merged[c] = nv
            content = 0
            for v in merged.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                merged = {c: v // content for c, v in merged.items()}
            vec = merged
    return len(pivots)
