"""Dense triangular layout for tables over {(x, y, z) : x + y + z <= bound}.

Positions are grouped into shells by token total t and laid out contiguously
in ascending (t, x, y), z implied. Every move strictly lowers the total, so a
sweep in layout order only ever reads completed entries.
"""

from __future__ import annotations

from typing import Iterator


def shell_offset(t: int) -> int:
    """Flat index of the first position with token total t."""
    return t * (t + 1) * (t + 2) // 6


def table_size(bound: int) -> int:
    """Number of positions with total <= bound: C(bound + 3, 3)."""
    return shell_offset(bound + 1)


def dense_index(t: int, x: int, y: int) -> int:
    """Flat index of position (x, y, t - x - y)."""
    return shell_offset(t) + x * (t + 1) - x * (x - 1) // 2 + y


def iter_shell(t: int) -> Iterator[tuple[int, int, int]]:
    """Positions of one shell in layout order."""
    for x in range(t + 1):
        for y in range(t - x + 1):
            yield x, y, t - x - y


def iter_positions(bound: int) -> Iterator[tuple[int, int, int]]:
    """All positions with total <= bound in layout order."""
    for t in range(bound + 1):
        yield from iter_shell(t)
