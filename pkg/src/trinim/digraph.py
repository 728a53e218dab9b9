"""The same take/return game on an arbitrary directed graph.

Positions are plain tuples of per-vertex token counts. A move picks a directed
edge (s, t), removes ``take`` >= 1 tokens from vertex s and returns
``give`` < ``take`` tokens to vertex t. Unlike the 3-cycle, a position with
tokens left may be terminal when no token sits on a vertex with an outgoing
edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, IllegalMove

#: (edge_index, take, give) — edge_index refers to Digraph.edges order.
GeneralMove = tuple[int, int, int]

#: Per-vertex token counts.
GeneralPosition = tuple[int, ...]


@dataclass(frozen=True)
class Digraph:
    """Directed graph given by a vertex count and an ordered tuple of edges.

    Self-loops are rejected: taking from and returning to the same vertex has
    no unambiguous reading, and every loop-free edge keeps the game finite.
    Edge order is preserved because move enumeration follows it.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise DomainError(f"vertex_count must be >= 1, got {self.vertex_count}")
        seen = set()
        for s, t in self.edges:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise DomainError(f"edge ({s}, {t}) out of range for {self.vertex_count} vertices")
            if s == t:
                raise DomainError(f"self-loop ({s}, {t}) is not allowed")
            if (s, t) in seen:
                raise DomainError(f"duplicate edge ({s}, {t})")
            seen.add((s, t))


def three_cycle() -> Digraph:
    """The triangle board: vertices X, Y, Z as 0, 1, 2 with edges X->Y->Z->X."""
    return Digraph(3, ((0, 1), (1, 2), (2, 0)))


def validate_tokens(g: Digraph, tokens: GeneralPosition) -> None:
    if len(tokens) != g.vertex_count:
        raise DomainError(f"expected {g.vertex_count} token counts, got {len(tokens)}")
    for i, v in enumerate(tokens):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise DomainError(f"tokens[{i}] must be a non-negative int, got {v!r}")


def general_legal_moves(g: Digraph, tokens: GeneralPosition) -> list[GeneralMove]:
    """All legal (edge_index, take, give) in edge order, take ascending, give ascending."""
    validate_tokens(g, tokens)
    moves = []
    for e, (s, _t) in enumerate(g.edges):
        for take in range(1, tokens[s] + 1):
            for give in range(take):
                moves.append((e, take, give))
    return moves


def general_is_terminal(g: Digraph, tokens: GeneralPosition) -> bool:
    """True iff no edge has a token on its source vertex."""
    validate_tokens(g, tokens)
    return all(tokens[s] == 0 for s, _t in g.edges)


def general_apply(g: Digraph, tokens: GeneralPosition, move: GeneralMove) -> GeneralPosition:
    """Apply a legal move; the total strictly decreases by take - give >= 1."""
    validate_tokens(g, tokens)
    e, take, give = move
    if not 0 <= e < len(g.edges):
        raise IllegalMove(f"edge index {e} out of range")
    s, t = g.edges[e]
    if take < 1 or take > tokens[s]:
        raise IllegalMove(f"cannot take {take} from vertex {s} holding {tokens[s]}")
    if give < 0 or give >= take:
        raise IllegalMove(f"give ({give}) must satisfy 0 <= give < take ({take})")
    out = list(tokens)
    out[s] -= take
    out[t] += give
    return tuple(out)
