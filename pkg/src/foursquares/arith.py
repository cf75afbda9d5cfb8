"""Exact integer utilities: square roots, valuations, Bezout, factoring."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import CapacityError

INT64_MAX = 2**63 - 1

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6


def check_int64(value: int, what: str = "value") -> int:
    if abs(value) > INT64_MAX:
        raise CapacityError(f"{what}={value} exceeds the signed 64-bit range")
    return value


def checked_mul(*factors: int, what: str = "product") -> int:
    out = 1
    for f in factors:
        out *= f
    return check_int64(out, what)


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def iroot4(n: int) -> int:
    """floor(n ** (1/4)) computed exactly."""
    return math.isqrt(math.isqrt(n))


def ord_p(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n``."""
    if n == 0:
        raise ValueError("ord_p(0) is undefined")
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) > 0 and a*s + b*t = g."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    # Pollard rho with Brent's cycle detection; n odd composite.
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Complete factorization of 2 <= n < 2**63.

    Trial division handles primes below 10**6; whatever cofactor survives is
    split with Brent's rho, seeded so the result is reproducible.
    """
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    check_int64(n, "n")
    counts: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            d = _brent(m, rng)
            stack.extend((d, m // d))
    return Factorization(tuple(sorted(counts.items())))


def legendre(a: int, p: int) -> int:
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def unit_group_cyclic(l: int) -> bool:
    """True iff (Z/lZ)^x is cyclic, i.e. l is 2, 4, p^r or 2p^k (p odd)."""
    if l < 2:
        raise ValueError(f"unit_group_cyclic needs l >= 2, got {l}")
    if l in (2, 4):
        return True
    if l % 4 == 0:
        return False
    odd = l // 2 if l % 2 == 0 else l
    return len(factorize(odd).factors) == 1
