"""Exact solver and playable engine for a Nim variant on a directed 3-cycle.

A position puts token piles on three vertices X, Y, Z joined by directed
edges X->Y->Z->X. A move picks an edge, removes i >= 1 tokens from its source
and puts back j < i on its target; (0, 0, 0) is terminal. The losing
positions have a closed form built on an exact integer golden-ratio test, and
this package pairs that classifier (with constructive winning moves) against
a brute-force table solver that re-derives everything from the rules alone.
"""

from .classify import (
    Classification,
    MISERE_SMALL_P,
    NORMAL_SMALL_P,
    all_winning_moves,
    classify,
    engine_move,
    first_legal_move,
    misere_outcome,
    normal_outcome,
    outcome,
    sum_split_witness,
    winning_move,
    winning_move_misere,
    winning_move_normal,
)
from .core import (
    COORD_MAX,
    Convention,
    EDGES,
    Edge,
    Outcome,
    TriangleMove,
    TrianglePosition,
    apply_move,
    format_move,
    format_position,
    is_legal_move,
    is_terminal,
    iter_legal_moves,
    legal_moves,
    move_count,
    parse_move,
    parse_position,
    rotations,
    total_tokens,
)
from .digraph import (
    Digraph,
    GeneralMove,
    GeneralPosition,
    general_apply,
    general_is_terminal,
    general_legal_moves,
    three_cycle,
    validate_tokens,
)
from .errors import (
    BoundExceeded,
    DomainError,
    IllegalMove,
    StateBudgetExceeded,
    TrinimError,
)
from .golden import geq_phi, phi_split_alternates
from .solver import (
    SolveTable,
    VerifyReport,
    mex,
    solve_general,
    solve_triangle,
    verify_theorems,
)

__version__ = "1.0.0"

__all__ = [
    "COORD_MAX",
    "EDGES",
    "BoundExceeded",
    "Classification",
    "Convention",
    "Digraph",
    "DomainError",
    "Edge",
    "GeneralMove",
    "GeneralPosition",
    "IllegalMove",
    "MISERE_SMALL_P",
    "NORMAL_SMALL_P",
    "Outcome",
    "SolveTable",
    "StateBudgetExceeded",
    "TriangleMove",
    "TrianglePosition",
    "TrinimError",
    "VerifyReport",
    "all_winning_moves",
    "apply_move",
    "classify",
    "engine_move",
    "first_legal_move",
    "format_move",
    "format_position",
    "general_apply",
    "general_is_terminal",
    "general_legal_moves",
    "geq_phi",
    "is_legal_move",
    "is_terminal",
    "iter_legal_moves",
    "legal_moves",
    "mex",
    "misere_outcome",
    "move_count",
    "normal_outcome",
    "outcome",
    "parse_move",
    "parse_position",
    "phi_split_alternates",
    "rotations",
    "solve_general",
    "solve_triangle",
    "sum_split_witness",
    "three_cycle",
    "total_tokens",
    "validate_tokens",
    "verify_theorems",
    "winning_move",
    "winning_move_misere",
    "winning_move_normal",
]
