"""Exception types shared across the package."""


class TrinimError(Exception):
    """Base class for all trinim errors."""


class DomainError(TrinimError, ValueError):
    """Input violates a documented precondition (bad coordinates, bad graph, ...)."""


class IllegalMove(TrinimError, ValueError):
    """Move application was attempted with a move that is not legal at the position."""


class BoundExceeded(TrinimError, ValueError):
    """Requested table bound is above the configured oracle limit."""


class StateBudgetExceeded(TrinimError, RuntimeError):
    """Reachable state space of a general-digraph game exceeds the configured budget."""
