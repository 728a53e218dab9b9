"""Numba-compiled retrograde kernels.

Shells are processed in ascending token total; every option of a position
lives in a strictly smaller shell, so a shell only reads completed entries
and positions within one shell are independent of each other.

Move enumeration, for a position (x, y, z) with total t: taking i from an
edge source and giving j < i to its target lands in shell t - i + j, e.g.
edge X->Y reaches (x - i, y + j, z).
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _shell_offset(t):
    return t * (t + 1) * (t + 2) // 6


@njit(cache=True)
def _index(t, x, y):
    return _shell_offset(t) + x * (t + 1) - x * (x - 1) // 2 + y


@njit(cache=True)
def solve_outcomes(bound, misere):
    """uint8 over the dense layout: 1 where the mover wins (N), 0 at P.

    Short-circuits on the first P option found.
    """
    table = np.zeros(_shell_offset(bound + 1), dtype=np.uint8)
    if misere:
        table[0] = 1
    for t in range(1, bound + 1):
        for x in range(t + 1):
            for y in range(t - x + 1):
                z = t - x - y
                is_n = False
                for i in range(1, x + 1):
                    for j in range(i):
                        if table[_index(t - i + j, x - i, y + j)] == 0:
                            is_n = True
                            break
                    if is_n:
                        break
                if not is_n:
                    for i in range(1, y + 1):
                        for j in range(i):
                            if table[_index(t - i + j, x, y - i)] == 0:
                                is_n = True
                                break
                        if is_n:
                            break
                if not is_n:
                    for i in range(1, z + 1):
                        for j in range(i):
                            if table[_index(t - i + j, x + j, y)] == 0:
                                is_n = True
                                break
                        if is_n:
                            break
                if is_n:
                    table[_index(t, x, y)] = 1
    return table


@njit(cache=True)
def solve_grundy(bound):
    """int32 Grundy values over the dense layout (normal play).

    mex needs every option value, so there is no short-circuit; a stamp array
    marks the values seen at the current position, avoiding per-position
    set allocation. A position has fewer than 3 * t * (t + 1) / 2 options,
    which bounds its Grundy value and sizes the stamp array.
    """
    table = np.zeros(_shell_offset(bound + 1), dtype=np.int32)
    cap = 3 * (bound * (bound + 1)) // 2 + 2
    seen = np.full(cap, -1, dtype=np.int64)
    stamp = 0
    for t in range(1, bound + 1):
        for x in range(t + 1):
            for y in range(t - x + 1):
                z = t - x - y
                for i in range(1, x + 1):
                    for j in range(i):
                        seen[table[_index(t - i + j, x - i, y + j)]] = stamp
                for i in range(1, y + 1):
                    for j in range(i):
                        seen[table[_index(t - i + j, x, y - i)]] = stamp
                for i in range(1, z + 1):
                    for j in range(i):
                        seen[table[_index(t - i + j, x + j, y)]] = stamp
                m = 0
                while seen[m] == stamp:
                    m += 1
                table[_index(t, x, y)] = m
                stamp += 1
    return table
