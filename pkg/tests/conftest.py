"""Shared reference implementations for the tests.

The naive solver below deliberately re-derives everything from the bare move
rule on plain tuples, sharing no code with the package: option sets are
enumerated inline, outcomes and Grundy values come from direct recursion.
It is the independent check for both the kernels and the classifier.
"""

from __future__ import annotations

from functools import lru_cache

import pytest


def naive_options(pos: tuple[int, int, int]) -> set[tuple[int, int, int]]:
    x, y, z = pos
    options = set()
    for i in range(1, x + 1):
        for j in range(i):
            options.add((x - i, y + j, z))
    for i in range(1, y + 1):
        for j in range(i):
            options.add((x, y - i, z + j))
    for i in range(1, z + 1):
        for j in range(i):
            options.add((x + j, y, z - i))
    return options


def _positions_by_total(bound: int):
    for t in range(bound + 1):
        for x in range(t + 1):
            for y in range(t - x + 1):
                yield (x, y, t - x - y)


@lru_cache(maxsize=8)
def naive_outcomes(bound: int, misere: bool = False) -> dict[tuple[int, int, int], str]:
    """Map position -> "P"/"N" for all totals <= bound."""
    table: dict[tuple[int, int, int], str] = {}
    for pos in _positions_by_total(bound):
        options = naive_options(pos)
        if not options:
            table[pos] = "N" if misere else "P"
        else:
            table[pos] = "N" if any(table[o] == "P" for o in options) else "P"
    return table


@lru_cache(maxsize=4)
def naive_grundy(bound: int) -> dict[tuple[int, int, int], int]:
    table: dict[tuple[int, int, int], int] = {}
    for pos in _positions_by_total(bound):
        values = {table[o] for o in naive_options(pos)}
        g = 0
        while g in values:
            g += 1
        table[pos] = g
    return table


@pytest.fixture(scope="session")
def positions_by_total():
    return _positions_by_total
