"""Small-integer bitset helpers.

Vertex sets and edge-index sets are stored as Python ints, one bit per
dense id. Python ints are arbitrary width, so the same code covers the
fast word-sized path and anything larger.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations


def mask_of(ids: Iterable[int]) -> int:
    """Pack an iterable of dense ids into a bitmask."""
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def tuple_of(mask: int) -> tuple[int, ...]:
    return tuple(bits_of(mask))


def is_subset(a: int, b: int) -> bool:
    """True when bitset ``a`` is contained in bitset ``b``."""
    return a & ~b == 0


def submasks_desc_size(mask: int):
    """Yield the submasks of ``mask`` by decreasing popcount.

    Within one size, submasks appear in lexicographic order of their
    sorted bit positions, so the order is total and deterministic.
    Lazy on purpose: scans that accept the first hit stay cheap even
    when the mask is wide.
    """
    positions = tuple(bits_of(mask))
    for size in range(len(positions), -1, -1):
        for combo in combinations(positions, size):
            yield mask_of(combo)
