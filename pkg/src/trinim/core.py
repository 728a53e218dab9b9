"""Game state, move legality, and move application for the triangle game.

The board is a directed 3-cycle X -> Y -> Z -> X with a non-negative token
count on each vertex. A move picks an edge, removes ``take`` >= 1 tokens from
the edge's source vertex, and puts ``give`` < ``take`` tokens back on the
target vertex, so every move strictly decreases the total number of tokens.
The only terminal position is (0, 0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import DomainError, IllegalMove

#: Per-coordinate bound enforced at construction and parse time. Keeps the
#: classifier's quadratic forms (b*b vs b*c + c*c) within 128-bit range even
#: on fixed-width backends.
COORD_MAX = 10**9


class Convention(Enum):
    """Winning rule: the player making the last move wins (normal) or loses (misere)."""

    NORMAL = "normal"
    MISERE = "misere"


class Outcome(Enum):
    """P: the previous player wins with optimal play; N: the next player wins."""

    P = "P"
    N = "N"


class Edge(Enum):
    """The three directed edges of the cycle, named by source/target vertex."""

    XY = "XY"
    YZ = "YZ"
    ZX = "ZX"

    @property
    def source(self) -> int:
        """Coordinate index tokens are taken from."""
        return _EDGE_SOURCE[self]

    @property
    def target(self) -> int:
        """Coordinate index tokens are returned to."""
        return (_EDGE_SOURCE[self] + 1) % 3


_EDGE_SOURCE = {Edge.XY: 0, Edge.YZ: 1, Edge.ZX: 2}
EDGES = (Edge.XY, Edge.YZ, Edge.ZX)


def _check_coord(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an int, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


@dataclass(frozen=True)
class TrianglePosition:
    """Token counts on the vertices X, Y, Z.

    COORD_MAX is enforced where positions enter from outside (parse_position
    and the HTTP layer), not here: a legal give can push a target vertex past
    the cap and apply_move must stay total on legal moves.
    """

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        _check_coord("x", self.x)
        _check_coord("y", self.y)
        _check_coord("z", self.z)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def __str__(self) -> str:
        return format_position(self)


@dataclass(frozen=True)
class TriangleMove:
    """Take ``take`` tokens from ``edge.source``, put ``give`` back on ``edge.target``.

    Construction requires take >= 1 and give >= 0; the remaining legality
    conditions (give < take, take <= tokens at the source) are checked against
    a position by :func:`is_legal_move` / :func:`apply_move`.
    """

    edge: Edge
    take: int
    give: int

    def __post_init__(self) -> None:
        if not isinstance(self.edge, Edge):
            raise DomainError(f"edge must be an Edge, got {self.edge!r}")
        if isinstance(self.take, bool) or not isinstance(self.take, int) or self.take < 1:
            raise DomainError(f"take must be a positive int, got {self.take!r}")
        if isinstance(self.give, bool) or not isinstance(self.give, int) or self.give < 0:
            raise DomainError(f"give must be a non-negative int, got {self.give!r}")

    def __str__(self) -> str:
        return format_move(self)


def is_terminal(p: TrianglePosition) -> bool:
    """True iff no move exists, i.e. p == (0, 0, 0)."""
    return p.x == 0 and p.y == 0 and p.z == 0


def total_tokens(p: TrianglePosition) -> int:
    """Total token count; every legal move strictly decreases it."""
    return p.x + p.y + p.z


def rotations(p: TrianglePosition) -> list[TrianglePosition]:
    """The three cyclic relabelings [(x,y,z), (y,z,x), (z,x,y)]."""
    x, y, z = p.as_tuple()
    return [p, TrianglePosition(y, z, x), TrianglePosition(z, x, y)]


def iter_legal_moves(p: TrianglePosition) -> Iterator[TriangleMove]:
    """Yield legal moves in deterministic order: edge XY, YZ, ZX; take asc; give asc."""
    coords = p.as_tuple()
    for edge in EDGES:
        src = coords[edge.source]
        for take in range(1, src + 1):
            for give in range(take):
                yield TriangleMove(edge, take, give)


def legal_moves(p: TrianglePosition) -> list[TriangleMove]:
    """All legal moves at p; empty exactly at the terminal position."""
    return list(iter_legal_moves(p))


def move_count(p: TrianglePosition) -> int:
    """Number of legal moves: sum of s(s+1)/2 over the three coordinates."""
    return sum(s * (s + 1) // 2 for s in p.as_tuple())


def is_legal_move(p: TrianglePosition, m: TriangleMove) -> bool:
    return 1 <= m.take <= p.as_tuple()[m.edge.source] and 0 <= m.give < m.take


def apply_move(p: TrianglePosition, m: TriangleMove) -> TrianglePosition:
    """Apply a legal move, returning the new position (inputs are untouched).

    Raises IllegalMove if take exceeds the source tokens or give >= take.
    """
    coords = list(p.as_tuple())
    if m.take > coords[m.edge.source]:
        raise IllegalMove(
            f"cannot take {m.take} from {m.edge.value[0]} holding {coords[m.edge.source]}"
        )
    if m.give >= m.take:
        raise IllegalMove(f"give ({m.give}) must be smaller than take ({m.take})")
    coords[m.edge.source] -= m.take
    coords[m.edge.target] += m.give
    return TrianglePosition(*coords)


# --- text formats used by the CLI and tests: "x,y,z" and "XY i j" ---

def parse_position(text: str) -> TrianglePosition:
    """Parse "x,y,z" (decimal, no spaces). Out-of-range coordinates are rejected here."""
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise DomainError(f"expected 'x,y,z', got {text!r}")
    coords = []
    for part in parts:
        if not part.isdigit():
            raise DomainError(f"expected 'x,y,z' with decimal coordinates, got {text!r}")
        value = int(part)
        if value > COORD_MAX:
            raise DomainError(f"coordinate {value} exceeds the maximum {COORD_MAX}")
        coords.append(value)
    return TrianglePosition(*coords)


def format_position(p: TrianglePosition) -> str:
    return f"{p.x},{p.y},{p.z}"


def parse_move(text: str) -> TriangleMove:
    """Parse "XY i j" / "YZ i j" / "ZX i j"."""
    parts = text.split()
    if len(parts) != 3:
        raise DomainError(f"expected 'XY i j', got {text!r}")
    name, take_s, give_s = parts
    try:
        edge = Edge(name.upper())
    except ValueError:
        raise DomainError(f"unknown edge {name!r}; expected XY, YZ or ZX") from None
    if not take_s.isdigit() or not give_s.isdigit():
        raise DomainError(f"take and give must be decimal integers, got {text!r}")
    return TriangleMove(edge, int(take_s), int(give_s))


def format_move(m: TriangleMove) -> str:
    return f"{m.edge.value} {m.take} {m.give}"
