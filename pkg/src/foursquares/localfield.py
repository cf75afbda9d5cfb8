"""Hilbert symbols, Hasse invariants and isotropy of ternary spaces over Q_v."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import factorize, is_prime, legendre, ord_p

Rational = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: a prime p, or the archimedean place when ``prime`` is None."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITY = Place(None)


def _as_place(v) -> Place:
    if isinstance(v, Place):
        return v
    if v is None or v == "inf":
        return INFINITY
    return Place(int(v))


def _square_class_int(x: Rational) -> int:
    # num/den and num*den differ by the square den^2.
    x = Fraction(x)
    if x == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    return x.numerator * x.denominator


def _split(p: int, n: int) -> tuple[int, int]:
    e = ord_p(p, n)
    return e, n // p**e


def hilbert_symbol(x: Rational, y: Rational, v) -> int:
    """(x, y)_v in {-1, +1} via the closed-form case split."""
    v = _as_place(v)
    a, b = _square_class_int(x), _square_class_int(y)
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.prime
    alpha, u = _split(p, a)
    beta, w = _split(p, b)
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        if beta % 2:
            sign *= legendre(u, p)
        if alpha % 2:
            sign *= legendre(w, p)
        return sign

    def eps(t):
        return ((t - 1) // 2) % 2

    def omega(t):
        return ((t * t - 1) // 8) % 2

    e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class DiagonalSpace:
    """Ternary quadratic space <a1> _|_ <a2> _|_ <a3> over Q."""

    entries: tuple[Fraction, Fraction, Fraction]

    def __init__(self, a1: Rational, a2: Rational, a3: Rational):
        entries = tuple(Fraction(a) for a in (a1, a2, a3))
        if any(a == 0 for a in entries):
            raise ValueError("degenerate space: zero diagonal entry")
        object.__setattr__(self, "entries", entries)

    @property
    def discriminant(self) -> Fraction:
        a1, a2, a3 = self.entries
        return a1 * a2 * a3


def hasse_invariant(space: DiagonalSpace, v) -> int:
    a = space.entries
    s = 1
    for i in range(3):
        for j in range(i, 3):
            s *= hilbert_symbol(a[i], a[j], v)
    return s


def is_isotropic(space: DiagonalSpace, v) -> bool:
    return hasse_invariant(space, v) == hilbert_symbol(-1, -1, v)


def anisotropic_places(space: DiagonalSpace) -> set[Place]:
    """Places where ``space`` is anisotropic.

    Only infinity, 2 and the odd primes dividing the discriminant can be
    anisotropic; every other place is skipped.
    """
    entries = space.entries
    if any(a.denominator != 1 for a in entries):
        raise ValueError("anisotropic_places expects integer entries")
    d = abs(int(space.discriminant))
    candidates = {INFINITY, Place(2)}
    if d > 1:
        candidates.update(Place(p) for p in factorize(d).primes if p != 2)
    return {v for v in candidates if not is_isotropic(space, v)}
