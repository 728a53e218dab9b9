"""Pure numpy retrograde kernels.

Per-position move enumeration is replaced by wedge unions. The options along
edge X->Y from (x, y, z) are exactly {(u, y + v, z) : u + v <= x - 1}: take
i = x - u, give j = v with j < i forced by u + v < x. That wedge splits into
diagonals of constant total, so two running unions capture it:

    D1[x, y, z] = union over v of f(x - v, y + v, z)   (same shell, built by
                  an or-accumulate along each shell diagonal)
    A1[x, y, z] = A1[x-1, y, z] | D1[x-1, y, z]        (whole wedge, one shell
                  below)

and symmetrically for the other two edges. Outcomes union booleans ("some
option is P"); Grundy values union uint64 bitmasks of option values, with mex
extracted per position from the lowest clear bit. Shells only read completed
shells, matching the layout's level-barrier contract.

Memory scales with (bound + 1)^3, so this path suits moderate bounds; the
numba kernels are preferred for the large sweeps.
"""

import numpy as np

from .indexing import shell_offset, table_size

_FULL_WORD = 64


def _shell_coords(t: int):
    """Coordinate arrays (xs, ys, zs) enumerating shell t in layout order."""
    xg, yg = np.meshgrid(np.arange(t + 1), np.arange(t + 1), indexing="ij")
    keep = xg + yg <= t
    xs = xg[keep]
    ys = yg[keep]
    return xs, ys, t - xs - ys


def _flatten(cube: np.ndarray, bound: int) -> np.ndarray:
    """Gather cube[x, y, z] into the dense (total, x, y) layout."""
    flat = np.empty(table_size(bound), dtype=cube.dtype)
    for t in range(bound + 1):
        xs, ys, zs = _shell_coords(t)
        flat[shell_offset(t) : shell_offset(t + 1)] = cube[xs, ys, zs]
    return flat


def solve_outcomes(bound: int, misere: bool) -> np.ndarray:
    """uint8 over the dense layout: 1 where the mover wins (N), 0 at P."""
    n = bound + 1
    p_cube = np.zeros((n, n, n), dtype=bool)
    wedges = [np.zeros((n, n, n), dtype=bool) for _ in range(3)]
    diags = [np.zeros((n, n, n), dtype=bool) for _ in range(3)]
    for t in range(bound + 1):
        xs, ys, zs = _shell_coords(t)
        if t == 0:
            p_cube[0, 0, 0] = not misere
        else:
            some_p = np.zeros(len(xs), dtype=bool)
            m = xs > 0
            some_p[m] = wedges[0][xs[m] - 1, ys[m], zs[m]] | diags[0][xs[m] - 1, ys[m], zs[m]]
            wedges[0][xs, ys, zs] = some_p
            a = np.zeros(len(xs), dtype=bool)
            m = ys > 0
            a[m] = wedges[1][xs[m], ys[m] - 1, zs[m]] | diags[1][xs[m], ys[m] - 1, zs[m]]
            wedges[1][xs, ys, zs] = a
            some_p |= a
            a = np.zeros(len(xs), dtype=bool)
            m = zs > 0
            a[m] = wedges[2][xs[m], ys[m], zs[m] - 1] | diags[2][xs[m], ys[m], zs[m] - 1]
            wedges[2][xs, ys, zs] = a
            some_p |= a
            p_cube[xs, ys, zs] = ~some_p
        # Shell diagonals: for each edge, lines of constant total parametrized
        # by the source coordinate k, or-accumulated in increasing k.
        acc = np.zeros((t + 1, t + 1), dtype=bool)
        acc[zs, xs] = p_cube[xs, ys, zs]
        acc = np.logical_or.accumulate(acc, axis=1)
        diags[0][xs, ys, zs] = acc[zs, xs]
        acc = np.zeros((t + 1, t + 1), dtype=bool)
        acc[xs, ys] = p_cube[xs, ys, zs]
        acc = np.logical_or.accumulate(acc, axis=1)
        diags[1][xs, ys, zs] = acc[xs, ys]
        acc = np.zeros((t + 1, t + 1), dtype=bool)
        acc[ys, zs] = p_cube[xs, ys, zs]
        acc = np.logical_or.accumulate(acc, axis=1)
        diags[2][xs, ys, zs] = acc[ys, zs]
    return _flatten(~p_cube, bound).astype(np.uint8)


def solve_grundy(bound: int) -> np.ndarray:
    """int32 Grundy values over the dense layout (normal play).

    Starts with enough 64-bit words to cover the empirically tight bound
    (values stay <= total) and widens on the rare saturation signal.
    """
    words = (bound + 2 + _FULL_WORD - 1) // _FULL_WORD
    while True:
        try:
            return _grundy_pass(bound, words)
        except OverflowError:
            words += 1


def _grundy_pass(bound: int, words: int) -> np.ndarray:
    n = bound + 1
    grundy = np.zeros((n, n, n), dtype=np.int32)
    shape = (n, n, n, words)
    wedges = [np.zeros(shape, dtype=np.uint64) for _ in range(3)]
    diags = [np.zeros(shape, dtype=np.uint64) for _ in range(3)]
    one = np.uint64(1)
    for t in range(bound + 1):
        xs, ys, zs = _shell_coords(t)
        if t > 0:
            option_bits = np.zeros((len(xs), words), dtype=np.uint64)
            steps = (
                (0, xs - 1, ys, zs, xs > 0),
                (1, xs, ys - 1, zs, ys > 0),
                (2, xs, ys, zs - 1, zs > 0),
            )
            for edge, ox, oy, oz, m in steps:
                a = np.zeros((len(xs), words), dtype=np.uint64)
                a[m] = wedges[edge][ox[m], oy[m], oz[m]] | diags[edge][ox[m], oy[m], oz[m]]
                wedges[edge][xs, ys, zs] = a
                option_bits |= a
            grundy[xs, ys, zs] = _mex_rows(option_bits, words)
        for edge, (rows, cols) in enumerate(((zs, xs), (xs, ys), (ys, zs))):
            acc = np.zeros((t + 1, t + 1, words), dtype=np.uint64)
            acc[rows, cols] = _own_bits(grundy[xs, ys, zs], words, one)
            acc = np.bitwise_or.accumulate(acc, axis=1)
            diags[edge][xs, ys, zs] = acc[rows, cols]
    return _flatten(grundy, bound)


def _own_bits(values: np.ndarray, words: int, one: np.uint64) -> np.ndarray:
    g = values.astype(np.uint64)
    bits = np.zeros((len(g), words), dtype=np.uint64)
    bits[np.arange(len(g)), (g >> np.uint64(6)).astype(np.int64)] = one << (g & np.uint64(63))
    return bits


def _mex_rows(option_bits: np.ndarray, words: int) -> np.ndarray:
    """Per-row mex of uint64 bitmask rows: position of the lowest clear bit.

    A fully saturated word contributes 64 and defers to the next word; all
    words saturated means the masks were too narrow, reported as overflow so
    the caller can widen.
    """
    lowzero = ~option_bits & (option_bits + np.uint64(1))
    tones = np.bitwise_count(lowzero - np.uint64(1))  # 64 exactly when saturated
    saturated = tones == _FULL_WORD
    all_prev = np.ones_like(saturated)
    all_prev[:, 1:] = np.logical_and.accumulate(saturated, axis=1)[:, :-1]
    mex = (tones * all_prev).sum(axis=1).astype(np.int32)
    if np.any(mex >= _FULL_WORD * words):
        raise OverflowError("grundy bitmask saturated")
    return mex
