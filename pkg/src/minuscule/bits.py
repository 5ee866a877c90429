"""Small helpers for subsets stored as integer bit masks."""

from __future__ import annotations

from typing import Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_string(mask: int, width: int) -> str:
    """Render ``mask`` as a left-to-right 0/1 string of length ``width``."""
    return "".join("1" if mask >> p & 1 else "0" for p in range(width))
