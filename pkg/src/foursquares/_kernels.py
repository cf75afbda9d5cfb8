"""Hot search loops.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with the same signature and the same lexicographic tie-breaking.
Set ``FOURSQUARES_NO_JIT=1`` (or run without numba installed) to bind the
numpy versions. Results never depend on the backend, only speed does.

All kernels work in int64; callers range-check their inputs first.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_JIT = HAVE_NUMBA and os.environ.get("FOURSQUARES_NO_JIT", "") not in ("1", "true", "yes")
BACKEND = "numba" if USE_JIT else "numpy"

NONE4 = (-1, -1, -1, -1)

# Exhaustive search keeps an n-sized lookup table; beyond this it is not desk scale.
TABLE_LIMIT = 2**31


def square_table(n_max: int) -> np.ndarray:
    """uint8 indicator of perfect squares in [0, n_max]."""
    if n_max > TABLE_LIMIT:
        from .errors import CapacityError

        raise CapacityError(f"exhaustive search up to {n_max} exceeds {TABLE_LIMIT}")
    table = np.zeros(n_max + 1, dtype=np.uint8)
    roots = np.arange(math.isqrt(n_max) + 1, dtype=np.int64)
    table[roots * roots] = 1
    return table


# --------------------------------------------------------------------------
# numba backend

if HAVE_NUMBA:

    @njit(cache=True)
    def _is_square_jit(v):
        if v < 0:
            return False
        r = np.int64(math.sqrt(np.float64(v)))
        while r * r > v:
            r -= 1
        while (r + 1) * (r + 1) <= v:
            r += 1
        return r * r == v

    @njit(cache=True)
    def _isqrt_jit(v):
        r = np.int64(math.sqrt(np.float64(v)))
        while r * r > v:
            r -= 1
        while (r + 1) * (r + 1) <= v:
            r += 1
        return r

    @njit(cache=True)
    def _first_witness_jit(a, b, n, is_sq):
        x = np.int64(0)
        while x * x <= n:
            rx = n - x * x
            y = np.int64(0)
            while y * y <= rx:
                if _is_square_jit(a * x + b * y):
                    rem = rx - y * y
                    z = np.int64(0)
                    while 2 * z * z <= rem:
                        if is_sq[rem - z * z]:
                            w = _isqrt_jit(rem - z * z)
                            return x, y, z, w
                        z += 1
                y += 1
            x += 1
        return -1, -1, -1, -1

    @njit(cache=True)
    def _scan_failures_jit(a, b, n_lo, n_hi, is_sq):
        out = np.empty(n_hi - n_lo + 1, dtype=np.int64)
        k = 0
        for n in range(n_lo, n_hi + 1):
            x, _, _, _ = _first_witness_jit(a, b, np.int64(n), is_sq)
            if x < 0:
                out[k] = n
                k += 1
        return out[:k]

    @njit(cache=True)
    def _first_failure_jit(a, b, n_max, is_sq):
        for n in range(0, n_max + 1):
            x, _, _, _ = _first_witness_jit(a, b, np.int64(n), is_sq)
            if x < 0:
                return n
        return -1

    @njit(cache=True)
    def _ternary_first_jit(c, t):
        z = np.int64(0)
        while 2 * c * z * z <= t:
            w = z
            while c * (z * z + w * w) <= t:
                rem = t - c * (z * z + w * w)
                if _is_square_jit(rem):
                    return _isqrt_jit(rem), z, w
                w += 1
            z += 1
        return -1, -1, -1


# --------------------------------------------------------------------------
# numpy backend


def _isqrt_np(v: np.ndarray) -> np.ndarray:
    r = np.floor(np.sqrt(v.astype(np.float64))).astype(np.int64)
    r -= (r * r > v).astype(np.int64)
    r += ((r + 1) * (r + 1) <= v).astype(np.int64)
    return r


def _is_square_np(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    r = _isqrt_np(np.maximum(v, 0))
    return (v >= 0) & (r * r == v)


def _first_witness_np(a, b, n, is_sq):
    n = int(n)
    s = math.isqrt(n)
    xs = np.arange(s + 1, dtype=np.int64)
    x, y = np.meshgrid(xs, xs, indexing="ij")
    rem = n - x * x - y * y
    ok = (rem >= 0) & _is_square_np(a * x + b * y)
    xs_c, ys_c, rem_c = x[ok], y[ok], rem[ok]
    if rem_c.size == 0:
        return NONE4
    zs = np.arange(math.isqrt(n // 2) + 1, dtype=np.int64)
    # rows follow (x, y) row-major order, columns ascending z
    r = rem_c[:, None] - zs[None, :] * zs[None, :]
    valid = (2 * zs[None, :] * zs[None, :] <= rem_c[:, None]) & (r >= 0)
    hit = np.zeros(r.shape, dtype=bool)
    hit[valid] = is_sq[r[valid]].astype(bool)
    rows = np.flatnonzero(hit.any(axis=1))
    if rows.size == 0:
        return NONE4
    i = rows[0]
    z = int(np.argmax(hit[i]))
    w = math.isqrt(int(rem_c[i]) - z * z)
    return int(xs_c[i]), int(ys_c[i]), z, w


def _scan_failures_np(a, b, n_lo, n_hi, is_sq):
    out = [n for n in range(n_lo, n_hi + 1) if _first_witness_np(a, b, n, is_sq)[0] < 0]
    return np.asarray(out, dtype=np.int64)


def _first_failure_np(a, b, n_max, is_sq):
    for n in range(0, n_max + 1):
        if _first_witness_np(a, b, n, is_sq)[0] < 0:
            return n
    return -1


def _ternary_first_np(c, t):
    c, t = int(c), int(t)
    s = math.isqrt(t // c)
    zs = np.arange(s + 1, dtype=np.int64)
    z, w = np.meshgrid(zs, zs, indexing="ij")
    rem = t - c * (z * z + w * w)
    ok = (z <= w) & (rem >= 0)
    ok[ok] = _is_square_np(rem[ok])
    idx = np.flatnonzero(ok.ravel())
    if idx.size == 0:
        return -1, -1, -1
    i = idx[0]
    zz, ww = int(z.ravel()[i]), int(w.ravel()[i])
    return math.isqrt(t - c * (zz * zz + ww * ww)), zz, ww


# --------------------------------------------------------------------------
# public bindings

if USE_JIT:
    first_witness = _first_witness_jit
    scan_failures_range = _scan_failures_jit
    first_failure = _first_failure_jit
    ternary_first = _ternary_first_jit
else:
    first_witness = _first_witness_np
    scan_failures_range = _scan_failures_np
    first_failure = _first_failure_np
    ternary_first = _ternary_first_np
