"""Time the numba and numpy solver kernels against each other.

Usage: python benchmarks/compare_backends.py [--bounds 40,70,100] [--repeat 3]

The numba numbers exclude JIT compilation (a throwaway warmup run at bound 2
triggers it); reported times are the best of --repeat runs.
"""

from __future__ import annotations

import argparse
import time

from trinim import Convention
from trinim.solver import solve_triangle
from trinim.solver.backend import numba_available


def best_time(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bounds", default="40,70,100")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    bounds = [int(b) for b in args.bounds.split(",")]

    backends = ["numpy"]
    if numba_available():
        solve_triangle(2, Convention.NORMAL, backend="numba")  # JIT warmup
        backends.insert(0, "numba")
    else:
        print("numba not importable; timing numpy only")

    jobs = [
        ("outcomes normal", dict(convention=Convention.NORMAL, grundy=False)),
        ("outcomes misere", dict(convention=Convention.MISERE, grundy=False)),
        ("grundy", dict(convention=Convention.NORMAL, grundy=True)),
    ]

    print(f"{'job':<18}{'bound':>6}" + "".join(f"{b:>12}" for b in backends))
    for label, kwargs in jobs:
        for bound in bounds:
            times = []
            for backend in backends:
                seconds = best_time(
                    args.repeat,
                    lambda b=backend: solve_triangle(bound, backend=b, **kwargs),
                )
                times.append(f"{seconds:>10.3f}s")
            print(f"{label:<18}{bound:>6}" + "".join(times))


if __name__ == "__main__":
    main()
