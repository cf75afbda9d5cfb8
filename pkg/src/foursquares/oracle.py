"""Exhaustive ground truth for restricted four-square representations."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .arith import check_int64, is_perfect_square
from .errors import CapacityError
from .solver import ORACLE, Decomposition


@dataclass
class ScanReport:
    pair: tuple[int, int]
    n_max: int
    failures: list[int]
    witness_sample: dict[int, Decomposition] = field(default_factory=dict)
    elapsed: float = 0.0


def has_restricted_representation(a: int, b: int, n: int) -> Decomposition | None:
    """Lexicographically first (x, y, z, w) >= 0 with sum of squares n and
    a x + b y a perfect square, or None."""
    if n < 0:
        return None
    check_int64(n, "n")
    x, y, z, w = _kernels.first_witness(a, b, n, _kernels.square_table(n))
    if x < 0:
        return None
    x, y, z, w = int(x), int(y), int(z), int(w)
    return Decomposition(n, x, y, z, w, math.isqrt(a * x + b * y), 0, ORACLE)


def _scan_chunk(args):
    a, b, lo, hi, n_max = args
    return _kernels.scan_failures_range(a, b, lo, hi, _kernels.square_table(n_max)).tolist()


def _sample_points(n_max: int) -> list[int]:
    pts, k = [], 1
    while k <= n_max:
        pts.append(k)
        k *= 10
    if n_max not in pts:
        pts.append(n_max)
    return pts


def scan_failures(a: int, b: int, n_max: int, jobs: int = 1) -> ScanReport:
    """Every n in [0, n_max] with no restricted representation.

    Work is split into contiguous n-ranges; the merged list is sorted so the
    report does not depend on ``jobs``.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    check_int64(n_max, "n_max")
    start = time.perf_counter()
    jobs = max(1, int(jobs))
    if jobs == 1:
        failures = _scan_chunk((a, b, 0, n_max, n_max))
    else:
        bounds = np.linspace(0, n_max + 1, 4 * jobs + 1).astype(np.int64)
        chunks = [
            (a, b, int(lo), int(hi) - 1, n_max)
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            failures = [n for part in pool.map(_scan_chunk, chunks) for n in part]
    failures = sorted(failures)
    failed = set(failures)
    sample = {}
    for n in _sample_points(n_max):
        if n not in failed:
            sample[n] = has_restricted_representation(a, b, n)
    return ScanReport((a, b), n_max, failures, sample, time.perf_counter() - start)


def four_square_partitions(n: int) -> list[tuple[int, int, int, int]]:
    """All (x, y, z, w) with 0 <= x <= y <= z <= w and sum of squares n."""
    if n < 0:
        return []
    out = []
    x = 0
    while 4 * x * x <= n:
        y = x
        while x * x + 3 * y * y <= n:
            z = y
            while x * x + y * y + 2 * z * z <= n:
                rest = n - x * x - y * y - z * z
                w = math.isqrt(rest)
                if w * w == rest and w >= z:
                    out.append((x, y, z, w))
                z += 1
            y += 1
        x += 1
    return out


def counterexample_family_check(r_max: int) -> list[tuple[int, int, bool]]:
    """For n = 4^(2r+1) * 6: check the unique partition {4^(r+1), 2*4^r, 2*4^r, 0}
    and the absence of any witness for 3x + 10y."""
    if r_max < 0:
        raise ValueError("r_max must be non-negative")
    if 4 ** (2 * r_max + 1) * 6 > 2**63 - 1:
        raise CapacityError(f"4^(2*{r_max}+1)*6 exceeds the signed 64-bit range")
    out = []
    for r in range(r_max + 1):
        n = 4 ** (2 * r + 1) * 6
        expected = [(0, 2 * 4**r, 2 * 4**r, 4 ** (r + 1))]
        verdict = four_square_partitions(n) == expected and has_restricted_representation(3, 10, n) is None
        out.append((r, n, verdict))
    return out


def first_failure(a: int, b: int, n_max: int) -> int | None:
    f = int(_kernels.first_failure(a, b, n_max, _kernels.square_table(n_max)))
    return None if f < 0 else f


def _squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def suitability_scan(coeff_max: int, n_max: int) -> dict[tuple[int, int], int | None]:
    """Least failing n <= n_max for every a <= b <= coeff_max with squarefree gcd."""
    table = _kernels.square_table(n_max)
    out = {}
    for a in range(1, coeff_max + 1):
        for b in range(a, coeff_max + 1):
            if not _squarefree(math.gcd(a, b)):
                continue
            f = int(_kernels.first_failure(a, b, n_max, table))
            out[(a, b)] = None if f < 0 else f
    return out


def cauchy_witness(n: int, m: int):
    """x, y, z, w >= 0 (sorted) with x^2+y^2+z^2+w^2 = n and x+y+z+w = m."""
    if n % 2 == 0 or m % 2 == 0 or n < 1 or m < 1:
        raise ValueError("cauchy_witness needs odd positive n and m")
    # z, w are fixed by s = z + w and q = z^2 + w^2: (z - w)^2 = 2q - s^2
    x = 0
    while 4 * x <= m and 4 * x * x <= n:
        y = x
        while x + 3 * y <= m and x * x + 3 * y * y <= n:
            s, q = m - x - y, n - x * x - y * y
            disc = 2 * q - s * s
            if disc >= 0 and is_perfect_square(disc):
                d = math.isqrt(disc)
                if (s - d) % 2 == 0 and (s - d) // 2 >= y:
                    return (x, y, (s - d) // 2, (s + d) // 2)
            y += 1
        x += 1
    return None


def _represented(coeffs, n_max: int) -> np.ndarray:
    """Boolean mask of [0, n_max] hit by sum(c_i x_i^2)."""
    sq = np.arange(math.isqrt(n_max) + 1, dtype=np.int64) ** 2
    hit = np.zeros(n_max + 1, dtype=bool)
    hit[0] = True
    for c in coeffs:
        vals = c * sq
        vals = vals[vals <= n_max]
        nxt = np.zeros_like(hit)
        for v in vals:
            nxt[v:] |= hit[: n_max + 1 - v]
        hit = nxt
    return hit


def dickson_gap_check(n_max: int) -> list[int]:
    """n <= n_max missed by x^2 + 2y^2 + 5z^2 + 5w^2 (x..w ranging over Z)."""
    hit = _represented((1, 2, 5, 5), n_max)
    return np.flatnonzero(~hit).tolist()


def lagrange_check(n_max: int) -> list[int]:
    """n <= n_max that are not sums of four squares."""
    hit = _represented((1, 1, 1, 1), n_max)
    return np.flatnonzero(~hit).tolist()


def cauchy_pairs(n_max: int):
    """Odd (n, m) with n <= n_max, m^2 < 4n and 3n < m^2 + 2m + 4."""
    for n in range(1, n_max + 1, 2):
        for m in range(1, 2 * math.isqrt(n) + 2, 2):
            if m * m < 4 * n and 3 * n < m * m + 2 * m + 4:
                yield n, m


def cauchy_check(n_max: int) -> list[tuple[int, int]]:
    """Pairs meeting Cauchy's hypotheses for which no witness was found."""
    return [(n, m) for n, m in cauchy_pairs(n_max) if cauchy_witness(n, m) is None]
