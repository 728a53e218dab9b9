"""Kernel backend selection.

Two interchangeable kernel modules exist: numba-compiled loops (fast, but JIT
compilation costs a few seconds on first use and requires numba) and a pure
numpy path with no compile step. TRINIM_BACKEND forces one ("numba" or
"numpy"); "auto" or unset prefers numba when it imports cleanly. An explicit
backend argument beats the environment.
"""

from __future__ import annotations

import os
from typing import Optional

from ..errors import DomainError

ENV_BACKEND = "TRINIM_BACKEND"

_CHOICES = ("auto", "numba", "numpy")

_numba_ok: Optional[bool] = None


def numba_available() -> bool:
    global _numba_ok
    if _numba_ok is None:
        try:
            import numba  # noqa: F401

            _numba_ok = True
        except Exception:
            _numba_ok = False
    return _numba_ok


def resolve_backend(name: Optional[str] = None) -> str:
    """Return "numba" or "numpy" for the requested or configured backend."""
    choice = name if name is not None else os.environ.get(ENV_BACKEND, "auto")
    choice = choice.strip().lower() or "auto"
    if choice not in _CHOICES:
        raise DomainError(f"unknown backend {choice!r}; expected one of {', '.join(_CHOICES)}")
    if choice == "numba" and not numba_available():
        raise DomainError("backend 'numba' requested but numba is not importable")
    if choice == "auto":
        return "numba" if numba_available() else "numpy"
    return choice


def load_kernels(name: Optional[str] = None):
    """Import and return the kernel module for the resolved backend.

    Both modules expose solve_outcomes(bound, misere) and solve_grundy(bound)
    over the dense layout of `indexing`.
    """
    resolved = resolve_backend(name)
    if resolved == "numba":
        from . import _kernels_numba as kernels
    else:
        from . import _kernels_numpy as kernels
    return kernels
