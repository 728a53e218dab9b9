"""Brute-force ground truth for the triangle game and arbitrary digraphs.

Nothing here knows the closed-form answer: tables are built by backward
induction over token totals (a terminal position loses the mover under normal
play and wins under misere; otherwise a position is N exactly when some option
is P). `verify_theorems` then replays the classifier against these tables.

Triangle tables are dense arrays computed by a kernel backend (see
`backend`); arbitrary digraphs go through a hash-map recursion instead.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Optional, Union

import numpy as np

from ..classify import (
    MISERE_SMALL_P,
    NORMAL_SMALL_P,
    _misere_p_coords,
    _witness_coords,
)
from ..core import Convention, Outcome, TrianglePosition, total_tokens
from ..digraph import (
    Digraph,
    GeneralPosition,
    general_apply,
    general_is_terminal,
    general_legal_moves,
    validate_tokens,
)
from ..errors import BoundExceeded, DomainError, StateBudgetExceeded
from .backend import ENV_BACKEND, load_kernels, resolve_backend
from .indexing import dense_index, iter_positions, table_size

__all__ = [
    "ENV_BACKEND",
    "ENV_ORACLE_LIMIT",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_STATE_BUDGET",
    "CheckResult",
    "SolveTable",
    "VerifyReport",
    "mex",
    "oracle_limit",
    "resolve_backend",
    "solve_general",
    "solve_triangle",
    "verify_theorems",
]

ENV_ORACLE_LIMIT = "TRINIM_ORACLE_LIMIT"
DEFAULT_ORACLE_LIMIT = 150

DEFAULT_STATE_BUDGET = 1_000_000

PositionLike = Union[TrianglePosition, tuple[int, int, int]]


def mex(values: Iterable[int]) -> int:
    """Smallest non-negative integer absent from the values."""
    present = set(values)
    m = 0
    while m in present:
        m += 1
    return m


def oracle_limit() -> int:
    """Largest permitted solve bound; TRINIM_ORACLE_LIMIT overrides the default."""
    raw = os.environ.get(ENV_ORACLE_LIMIT)
    if raw is None:
        return DEFAULT_ORACLE_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{ENV_ORACLE_LIMIT} must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError(f"{ENV_ORACLE_LIMIT} must be non-negative, got {value}")
    return value


class SolveTable:
    """Outcomes, and optionally Grundy values, for every position with token
    total at most `bound`.

    Backed by flat arrays in the dense (total, x, y) layout; lookups are O(1).
    Nothing mutates the arrays after construction, so tables are safe to share
    across threads.
    """

    def __init__(
        self,
        bound: int,
        convention: Convention,
        outcomes: np.ndarray,
        grundy: Optional[np.ndarray] = None,
    ):
        expected = table_size(bound)
        if len(outcomes) != expected:
            raise DomainError(f"outcome array has {len(outcomes)} entries, expected {expected}")
        if grundy is not None and len(grundy) != expected:
            raise DomainError(f"grundy array has {len(grundy)} entries, expected {expected}")
        self.bound = bound
        self.convention = convention
        self._n_flags = outcomes
        self._grundy = grundy

    def __len__(self) -> int:
        return table_size(self.bound)

    def __repr__(self) -> str:
        grundy = "with" if self.has_grundy else "without"
        return (
            f"SolveTable(bound={self.bound}, convention={self.convention.value}, "
            f"{len(self)} positions, {grundy} grundy)"
        )

    @property
    def has_grundy(self) -> bool:
        return self._grundy is not None

    def _flat_index(self, p: PositionLike) -> int:
        x, y, z = p.as_tuple() if isinstance(p, TrianglePosition) else p
        if x < 0 or y < 0 or z < 0:
            raise DomainError(f"coordinates must be non-negative, got ({x},{y},{z})")
        t = x + y + z
        if t > self.bound:
            raise BoundExceeded(f"position total {t} exceeds table bound {self.bound}")
        return dense_index(t, x, y)

    def outcome(self, p: PositionLike) -> Outcome:
        return Outcome.N if self._n_flags[self._flat_index(p)] else Outcome.P

    def grundy(self, p: PositionLike) -> int:
        if self._grundy is None:
            raise DomainError("table was solved without Grundy values")
        return int(self._grundy[self._flat_index(p)])

    def iter_rows(self) -> Iterator[tuple[int, int, int, Outcome, Optional[int]]]:
        """Yield (x, y, z, outcome, grundy or None) in ascending (total, x, y)."""
        flags = self._n_flags
        grundy = self._grundy
        for i, (x, y, z) in enumerate(iter_positions(self.bound)):
            g = int(grundy[i]) if grundy is not None else None
            yield x, y, z, (Outcome.N if flags[i] else Outcome.P), g

    def p_positions(self) -> list[tuple[int, int, int]]:
        return [(x, y, z) for x, y, z, out, _ in self.iter_rows() if out is Outcome.P]

    def write_csv(self, stream: IO[str]) -> int:
        """Write `x,y,z,outcome[,grundy]` rows in layout order; returns row count."""
        with_grundy = self.has_grundy
        stream.write("x,y,z,outcome,grundy\n" if with_grundy else "x,y,z,outcome\n")
        rows = 0
        for x, y, z, out, g in self.iter_rows():
            if with_grundy:
                stream.write(f"{x},{y},{z},{out.value},{g}\n")
            else:
                stream.write(f"{x},{y},{z},{out.value}\n")
            rows += 1
        return rows


def _check_bound(bound: int) -> None:
    if isinstance(bound, bool) or not isinstance(bound, int):
        raise DomainError(f"bound must be an integer, got {bound!r}")
    if bound < 0:
        raise DomainError(f"bound must be non-negative, got {bound}")
    limit = oracle_limit()
    if bound > limit:
        raise BoundExceeded(f"bound {bound} exceeds the oracle limit {limit}")


def solve_triangle(
    bound: int,
    convention: Convention = Convention.NORMAL,
    *,
    grundy: Optional[bool] = None,
    backend: Optional[str] = None,
) -> SolveTable:
    """Solve every triangle position with total <= bound by backward induction.

    Grundy values are filled for normal play by default; pass grundy=False to
    skip that pass (outcome solving short-circuits and is much cheaper) or
    grundy=True to insist. Misere play is outcomes-only.
    """
    _check_bound(bound)
    want_grundy = convention is Convention.NORMAL if grundy is None else bool(grundy)
    if want_grundy and convention is not Convention.NORMAL:
        raise DomainError("Grundy values are only defined here under normal play")
    kernels = load_kernels(backend)
    outcomes = kernels.solve_outcomes(bound, convention is Convention.MISERE)
    values = kernels.solve_grundy(bound) if want_grundy else None
    return SolveTable(bound, convention, outcomes, values)


def solve_general(
    graph: Digraph,
    start: GeneralPosition,
    convention: Convention = Convention.NORMAL,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> dict[GeneralPosition, Outcome]:
    """Outcome of every position reachable from start on an arbitrary digraph.

    Enumerates the reachable set breadth-first, counting it against
    state_budget, then evaluates in ascending token total (every move strictly
    lowers the total). Terminal means no edge source holds a token; tokens may
    remain on vertices without outgoing edges.
    """
    validate_tokens(graph, start)
    reachable = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for pos in frontier:
            for move in general_legal_moves(graph, pos):
                child = general_apply(graph, pos, move)
                if child not in reachable:
                    reachable.add(child)
                    if len(reachable) > state_budget:
                        raise StateBudgetExceeded(
                            f"reachable set exceeds the budget of {state_budget} positions"
                        )
                    next_frontier.append(child)
        frontier = next_frontier

    outcomes: dict[GeneralPosition, Outcome] = {}
    for pos in sorted(reachable, key=lambda q: (sum(q), q)):
        if general_is_terminal(graph, pos):
            outcomes[pos] = Outcome.P if convention is Convention.NORMAL else Outcome.N
        elif any(
            outcomes[general_apply(graph, pos, move)] is Outcome.P
            for move in general_legal_moves(graph, pos)
        ):
            outcomes[pos] = Outcome.N
        else:
            outcomes[pos] = Outcome.P
    return outcomes


@dataclass(frozen=True)
class CheckResult:
    """One verification check: what was compared and every disagreement."""

    name: str
    checked: int
    mismatches: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class VerifyReport:
    bound: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def mismatch_count(self) -> int:
        return sum(len(check.mismatches) for check in self.checks)

    def summary(self) -> dict:
        """Machine-readable form, mismatch lists included."""
        return {
            "bound": self.bound,
            "ok": self.ok,
            "mismatch_count": self.mismatch_count,
            "checks": [
                {
                    "name": check.name,
                    "checked": check.checked,
                    "mismatch_count": len(check.mismatches),
                    "mismatches": list(check.mismatches),
                }
                for check in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = [f"verification up to total {self.bound}"]
        for check in self.checks:
            status = "ok" if check.passed else f"FAIL ({len(check.mismatches)} mismatches)"
            lines.append(f"  {check.name}: {check.checked} checked, {status}")
            for entry in check.mismatches[:10]:
                lines.append(f"    {entry}")
            if len(check.mismatches) > 10:
                lines.append(f"    ... and {len(check.mismatches) - 10} more")
        verdict = "all checks passed" if self.ok else f"{self.mismatch_count} total mismatches"
        lines.append(verdict)
        return "\n".join(lines)


def verify_theorems(
    bound: int,
    conventions: Iterable[Convention] = (Convention.NORMAL, Convention.MISERE),
    *,
    backend: Optional[str] = None,
) -> VerifyReport:
    """Replay the closed-form classifier against freshly solved tables.

    For normal play this also cross-checks the Grundy structure the closed
    form predicts: value zero exactly on the describable P-set, value one on
    each of the four exceptional misere positions, and P outcomes on the four
    smallest P-positions. Mismatches are report content, never exceptions.
    """
    _check_bound(bound)
    wanted = tuple(dict.fromkeys(conventions))
    checks: list[CheckResult] = []
    positions = table_size(bound)

    if Convention.NORMAL in wanted:
        table = solve_triangle(bound, Convention.NORMAL, grundy=True, backend=backend)
        outcome_bad = []
        grundy_bad = []
        for x, y, z, out, g in table.iter_rows():
            claimed_p = _witness_coords(x, y, z) is not None
            if claimed_p != (out is Outcome.P):
                expected = "P" if claimed_p else "N"
                outcome_bad.append(f"({x},{y},{z}) classifier={expected} table={out.value}")
            if claimed_p != (g == 0):
                grundy_bad.append(f"({x},{y},{z}) grundy={g} classifier_p={claimed_p}")
        checks.append(CheckResult("normal outcomes vs classifier", positions, tuple(outcome_bad)))
        checks.append(CheckResult("grundy zero iff classifier P", positions, tuple(grundy_bad)))

        small_bad = []
        ones = [p for p in MISERE_SMALL_P if total_tokens(p) <= bound]
        for p in ones:
            g = table.grundy(p)
            if g != 1:
                small_bad.append(f"{p.as_tuple()} grundy={g} expected 1")
        checks.append(CheckResult("S1- members have grundy 1", len(ones), tuple(small_bad)))

        small_bad = []
        smalls = [p for p in NORMAL_SMALL_P if total_tokens(p) <= bound]
        for p in smalls:
            out = table.outcome(p)
            if out is not Outcome.P:
                small_bad.append(f"{p.as_tuple()} normal outcome={out.value} expected P")
        checks.append(CheckResult("S1+ members are P under normal", len(smalls), tuple(small_bad)))

    if Convention.MISERE in wanted:
        table = solve_triangle(bound, Convention.MISERE, backend=backend)
        outcome_bad = []
        for x, y, z, out, _ in table.iter_rows():
            claimed_p = _misere_p_coords(x, y, z)
            if claimed_p != (out is Outcome.P):
                expected = "P" if claimed_p else "N"
                outcome_bad.append(f"({x},{y},{z}) classifier={expected} table={out.value}")
        checks.append(CheckResult("misere outcomes vs classifier", positions, tuple(outcome_bad)))

        small_bad = []
        smalls = [p for p in NORMAL_SMALL_P if total_tokens(p) <= bound]
        for p in smalls:
            out = table.outcome(p)
            if out is not Outcome.N:
                small_bad.append(f"{p.as_tuple()} misere outcome={out.value} expected N")
        checks.append(CheckResult("S1+ members are N under misere", len(smalls), tuple(small_bad)))

    return VerifyReport(bound, tuple(checks))
