"""Headline guarantees, one test per claim, each reporting a PASS/FAIL line.

These are the checks the package stands on: the closed-form classifier agrees
exactly with brute-force tables at scale, the constructive moves win, and the
integer golden-ratio test is bit-for-bit right. Each test prints a single
summary line with capture suspended, so a full run reads as a checklist, and
asserts both exactness and the time budget.
"""

import math
import time

import numpy as np
import pytest

from trinim import (
    Convention,
    Outcome,
    TrianglePosition,
    apply_move,
    geq_phi,
    is_legal_move,
    iter_legal_moves,
    misere_outcome,
    normal_outcome,
    outcome,
    phi_split_alternates,
    solve_triangle,
    winning_move,
)
from trinim.classify import MISERE_SMALL_P, NORMAL_SMALL_P
from trinim.solver.indexing import iter_positions

NORMAL = Convention.NORMAL
MISERE = Convention.MISERE

# 256 fractional bits of phi = (1 + sqrt(5)) / 2; reference for the boundary test
PHI_FP = (2**256 + math.isqrt(5 * 2**512)) // 2


@pytest.fixture
def report(capfd):
    def _report(name: str, ok: bool, detail: str, elapsed: float) -> None:
        status = "PASS" if ok else "FAIL"
        with capfd.disabled():
            print(f"{status} {name}: {detail} [{elapsed:.1f}s]", flush=True)

    return _report


def test_normal_play_closed_form_matches_table_to_total_100(report):
    t0 = time.perf_counter()
    table = solve_triangle(100, NORMAL, grundy=False)
    mismatches = sum(
        1
        for x, y, z, out, _ in table.iter_rows()
        if normal_outcome(TrianglePosition(x, y, z)) is not out
    )
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and len(table) == 176851 and elapsed < 120
    report(
        "normal outcomes, closed form vs table",
        ok,
        f"{len(table)} positions, {mismatches} mismatches",
        elapsed,
    )
    assert len(table) == 176851
    assert mismatches == 0
    assert elapsed < 120


def test_misere_play_closed_form_matches_table_to_total_100(report):
    t0 = time.perf_counter()
    table = solve_triangle(100, MISERE, grundy=False)
    mismatches = sum(
        1
        for x, y, z, out, _ in table.iter_rows()
        if misere_outcome(TrianglePosition(x, y, z)) is not out
    )
    small_flips_hold = all(table.outcome(p) is Outcome.P for p in MISERE_SMALL_P) and all(
        table.outcome(p) is Outcome.N for p in NORMAL_SMALL_P
    )
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and small_flips_hold and elapsed < 120
    report(
        "misere outcomes, closed form vs table",
        ok,
        f"{len(table)} positions, {mismatches} mismatches, small sets flip: {small_flips_hold}",
        elapsed,
    )
    assert mismatches == 0
    assert small_flips_hold
    assert elapsed < 120


def test_grundy_zero_set_equals_closed_form_p_set_to_total_60(report):
    t0 = time.perf_counter()
    table = solve_triangle(60, NORMAL, grundy=True)
    mismatches = sum(
        1
        for x, y, z, out, g in table.iter_rows()
        if (g == 0) != (normal_outcome(TrianglePosition(x, y, z)) is Outcome.P)
    )
    unit_grundy = [table.grundy(p) for p in MISERE_SMALL_P]
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and unit_grundy == [1, 1, 1, 1] and elapsed < 180
    report(
        "grundy zero set equals P set",
        ok,
        f"{len(table)} positions, {mismatches} mismatches, "
        f"grundy of the four misere exceptions: {unit_grundy}",
        elapsed,
    )
    assert mismatches == 0
    assert unit_grundy == [1, 1, 1, 1]
    assert elapsed < 180


def test_sum_split_alternative_holds_for_all_pairs_to_2000(report):
    t0 = time.perf_counter()
    checked = 0
    failures = 0
    for y in range(1, 2001):
        for z in range(1, y + 1):
            checked += 1
            if not phi_split_alternates(y, z):
                failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and checked == 2001000 and elapsed < 5
    report(
        "exactly one golden inequality per sum split",
        ok,
        f"{checked} pairs, {failures} failures",
        elapsed,
    )
    assert checked == 2001000
    assert failures == 0
    assert elapsed < 5


def test_constructive_moves_win_for_every_n_position_to_total_100(report):
    t0 = time.perf_counter()
    checked = 0
    failures = 0
    for coords in iter_positions(100):
        if coords == (0, 0, 0):
            # terminal: N under misere by definition, but there is no move
            continue
        p = TrianglePosition(*coords)
        for convention in (NORMAL, MISERE):
            if outcome(p, convention) is Outcome.P:
                continue
            checked += 1
            move = winning_move(p, convention)
            if (
                move is None
                or not is_legal_move(p, move)
                or outcome(apply_move(p, move), convention) is not Outcome.P
            ):
                failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0
    report(
        "constructive moves land on P-positions",
        ok,
        f"{checked} N-positions over both conventions, {failures} failures",
        elapsed,
    )
    assert failures == 0


def test_golden_ratio_test_matches_fixed_point_reference(report):
    t0 = time.perf_counter()

    def fixed_point_geq(b: int, c: int) -> bool:
        if c == 0:
            return True
        return b >= ((c * PHI_FP) >> 256) + 1

    fib = [0, 1]
    while len(fib) <= 41:
        fib.append(fib[-1] + fib[-2])
    fib_ok = all(
        geq_phi(fib[n + 1], fib[n]) == fixed_point_geq(fib[n + 1], fib[n]) for n in range(41)
    )

    # exhaustive grid b, c <= 5000, vectorized; values stay far inside int64
    size = 5001
    b = np.arange(size, dtype=np.int64)[:, None]
    c = np.arange(size, dtype=np.int64)[None, :]
    quad = b * b > b * c + c * c
    quad[:, 0] = True
    thresholds = np.array(
        [0] + [((k * PHI_FP) >> 256) + 1 for k in range(1, size)], dtype=np.int64
    )
    grid_ok = bool(np.array_equal(quad, b >= thresholds[None, :]))

    margin = 233 * 233 - 233 * 144 - 144 * 144
    boundary_ok = geq_phi(233, 144) and margin == 1

    elapsed = time.perf_counter() - t0
    ok = fib_ok and grid_ok and boundary_ok
    report(
        "integer golden-ratio test vs 256-bit fixed point",
        ok,
        f"fibonacci pairs to F40: {fib_ok}, grid to 5000: {grid_ok}, "
        f"(233,144) margin: {margin}",
        elapsed,
    )
    assert fib_ok
    assert grid_ok
    assert boundary_ok


def test_p_set_is_closed_against_single_moves_to_total_60(report):
    t0 = time.perf_counter()
    members = 0
    violations = 0
    for coords in iter_positions(60):
        p = TrianglePosition(*coords)
        if normal_outcome(p) is not Outcome.P:
            continue
        members += 1
        for move in iter_legal_moves(p):
            if normal_outcome(apply_move(p, move)) is Outcome.P:
                violations += 1
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and members > 0
    report(
        "no move connects two P-positions",
        ok,
        f"{members} P-positions, {violations} violating options",
        elapsed,
    )
    assert members > 0
    assert violations == 0
