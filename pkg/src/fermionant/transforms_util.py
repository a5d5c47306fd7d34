"""GF(2) rank on int bitmasks (Python ints are unbounded, so one "word" per
row covers any edge count)."""

from __future__ import annotations


def gf2_rank(rows: list[int]) -> int:
    """Rank of the span of the given bitmask vectors over GF(2), by Gaussian
    elimination keyed on the leading bit."""
    pivots: dict[int, int] = {}
    for vec in rows:
        x = vec
        while x:
            msb = x.bit_length() - 1
            if msb in pivots:
                x ^= pivots[msb]
            else:
                pivots[msb] = x
                break
    return len(pivots)
