"""Closed-form outcome classification and constructive winning moves.

The losing (P) positions of the triangle game have an exact description. Under
normal play they are the positions with a cyclic rotation (a, b, c) satisfying

    a = b + c   and   b >= phi * c.

Under misere play the description is the same for a = b + c >= 2, plus four
small exceptional positions: (1,0,0), (0,1,0), (0,0,1) and (1,1,1). Every
other position is a win for the player to move, and for each such position a
single explicit move into the P-set can be read off the case analysis below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Convention,
    Edge,
    EDGES,
    Outcome,
    TriangleMove,
    TrianglePosition,
    apply_move,
    is_terminal,
    iter_legal_moves,
    total_tokens,
)
from .golden import geq_phi

#: The four smallest normal-play P-positions (wire name "S1+"): exactly the
#: members of the golden-split set whose decomposition has a = b + c <= 1.
NORMAL_SMALL_P = (
    TrianglePosition(0, 0, 0),
    TrianglePosition(1, 1, 0),
    TrianglePosition(1, 0, 1),
    TrianglePosition(0, 1, 1),
)

#: The four exceptional misere P-positions (wire name "S1-").
MISERE_SMALL_P = (
    TrianglePosition(1, 0, 0),
    TrianglePosition(0, 1, 0),
    TrianglePosition(0, 0, 1),
    TrianglePosition(1, 1, 1),
)

#: Wire names for the matched-set field of a Classification.
SET_GOLDEN = "S"
SET_NORMAL_SMALL = "S1+"
SET_MISERE_SMALL = "S1-"
SET_MISERE_LARGE = "S2-"


_MISERE_SMALL_COORDS = frozenset(p.as_tuple() for p in MISERE_SMALL_P)


def _rotation(p: TrianglePosition, r: int) -> tuple[int, int, int]:
    c = p.as_tuple()
    return (c[r % 3], c[(r + 1) % 3], c[(r + 2) % 3])


def _witness_coords(x: int, y: int, z: int) -> Optional[int]:
    # Unrolled over the three rotations; hot in exhaustive sweeps.
    if x == y + z and geq_phi(y, z):
        return 0
    if y == z + x and geq_phi(z, x):
        return 1
    if z == x + y and geq_phi(x, y):
        return 2
    return None


def _misere_p_coords(x: int, y: int, z: int) -> bool:
    # A witness rotation has a = b + c, hence total = 2a, so a >= 2 is total >= 4.
    if (x, y, z) in _MISERE_SMALL_COORDS:
        return True
    return x + y + z >= 4 and _witness_coords(x, y, z) is not None


def sum_split_witness(p: TrianglePosition) -> Optional[int]:
    """Smallest rotation index r such that rotating p by r gives (a, b, c)
    with a = b + c and b >= phi * c, or None when no rotation qualifies."""
    return _witness_coords(p.x, p.y, p.z)


def normal_outcome(p: TrianglePosition) -> Outcome:
    return Outcome.P if _witness_coords(p.x, p.y, p.z) is not None else Outcome.N


def misere_outcome(p: TrianglePosition) -> Outcome:
    return Outcome.P if _misere_p_coords(p.x, p.y, p.z) else Outcome.N


def outcome(p: TrianglePosition, convention: Convention) -> Outcome:
    if convention is Convention.NORMAL:
        return normal_outcome(p)
    return misere_outcome(p)


@dataclass(frozen=True)
class Classification:
    """Outcome plus which P-set description matched, if any.

    matched_set is one of "S", "S1+", "S1-", "S2-" or None; it is non-None
    exactly when the outcome is P under the queried convention.
    witness_rotation is the rotation index satisfying the golden sum split,
    independent of convention, when one exists.
    """

    position: TrianglePosition
    convention: Convention
    outcome: Outcome
    matched_set: Optional[str]
    witness_rotation: Optional[int]


def classify(p: TrianglePosition, convention: Convention) -> Classification:
    witness = sum_split_witness(p)
    if convention is Convention.NORMAL:
        if witness is None:
            matched = None
        elif p in NORMAL_SMALL_P:
            matched = SET_NORMAL_SMALL
        else:
            matched = SET_GOLDEN
    else:
        if p in MISERE_SMALL_P:
            matched = SET_MISERE_SMALL
        elif witness is not None and total_tokens(p) >= 4:
            matched = SET_MISERE_LARGE
        else:
            matched = None
    out = Outcome.P if matched is not None else Outcome.N
    return Classification(p, convention, out, matched, witness)


def _max_first_rotation(p: TrianglePosition) -> int:
    """Rotation index putting a maximal coordinate first (smallest index on ties)."""
    coords = p.as_tuple()
    return coords.index(max(coords))


def _unrotate(move_edge: int, take: int, give: int, r: int) -> TriangleMove:
    # A move on frame-edge e of the rotated position acts on original edge (e + r) % 3.
    return TriangleMove(EDGES[(move_edge + r) % 3], take, give)


def winning_move_normal(p: TrianglePosition) -> Optional[TriangleMove]:
    """The explicit winning move for a normal-play N-position, else None.

    With the position rotated so the first coordinate x is maximal, exactly one
    case applies and its move lands in the P-set:

      (1) z >= y:                      take all of x, give z - y      -> (0, z, z)
      (2) y > z, y < phi*z:            take x - (y - z) from x        -> (y-z, y, z)
      (3) y >= phi*z and x > y + z:    take x - (y + z) from x        -> (y+z, y, z)
      (4) y >= phi*z and x < y + z:    take all of y, give x - z      -> (x, 0, x)

    The boundary x = y + z with y >= phi*z is the P-set itself and never
    reaches the dispatch. The returned move is expressed in the original frame.
    """
    if sum_split_witness(p) is not None:
        return None
    r = _max_first_rotation(p)
    x, y, z = _rotation(p, r)
    if z >= y:
        return _unrotate(0, x, z - y, r)
    if not geq_phi(y, z):
        return _unrotate(0, x - (y - z), 0, r)
    if x > y + z:
        return _unrotate(0, x - (y + z), 0, r)
    return _unrotate(1, y, x - z, r)


def winning_move_misere(p: TrianglePosition) -> Optional[TriangleMove]:
    """The explicit winning move for a misere N-position, else None.

    None is also returned for the terminal position (a misere N-position with
    no move to make). After the max-first rotation:

      (1-1) z >= y, z == 0:        -> (1, 0, 0)
      (1-2) z >= y, z == 1:        -> (0, 0, 1) when y == 0, (1, 1, 1) when y == 1
      (1-3) z >= y, z >= 2:        -> (0, z, z)
      (2)   (y, z) == (1, 0):      -> (0, 1, 0)
      (3)   y > z, y >= 2:         the normal-play move; its target has a
                                   sum split with a >= 2, so it stays P here.
    """
    if is_terminal(p) or misere_outcome(p) is Outcome.P:
        return None
    r = _max_first_rotation(p)
    x, y, z = _rotation(p, r)
    if z >= y:
        if z == 0:
            return _unrotate(0, x - 1, 0, r)
        if z == 1:
            take = x if y == 0 else x - 1
            return _unrotate(0, take, 0, r)
        return _unrotate(0, x, z - y, r)
    if y == 1 and z == 0:
        return _unrotate(0, x, 0, r)
    return winning_move_normal(p)


def winning_move(p: TrianglePosition, convention: Convention) -> Optional[TriangleMove]:
    if convention is Convention.NORMAL:
        return winning_move_normal(p)
    return winning_move_misere(p)


def all_winning_moves(p: TrianglePosition, convention: Convention) -> list[TriangleMove]:
    """Every legal move whose result is a P-position under the convention.

    Exhaustive over legal_moves, so intended for desk-scale positions; the
    constructive move is always among the results when p is an N-position.
    """
    return [m for m in iter_legal_moves(p) if outcome(apply_move(p, m), convention) is Outcome.P]


def first_legal_move(p: TrianglePosition) -> Optional[TriangleMove]:
    """First move in enumeration order (edge XY, YZ, ZX), or None at terminal."""
    coords = p.as_tuple()
    for edge in EDGES:
        if coords[edge.source] >= 1:
            return TriangleMove(edge, 1, 0)
    return None


def engine_move(p: TrianglePosition, convention: Convention) -> Optional[TriangleMove]:
    """Engine policy: the constructive winning move when one exists, otherwise
    the deterministic first legal move; None only at the terminal position."""
    m = winning_move(p, convention)
    if m is not None:
        return m
    return first_legal_move(p)
