"""Constructive solver for n = x^2+y^2+z^2+w^2 with ax+by a perfect square.

The constructive path follows the ternary-lattice argument: split n = 16^d n1,
pick m with b^2 n1 <= m^4 <= (a^2+b^2) n1 in the right 2-adic class, write
(a^2+b^2) n1 - m^4 = u^2 + c z^2 + c w^2, and recover x, y from u through a
Bezout relation a s + b t = m^2.  When that fails (the lattice argument only
works for n beyond an ineffective bound), ``solve`` falls back to exhaustive
search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import (
    INT64_MAX,
    Factorization,
    check_int64,
    ext_gcd,
    factorize,
    iroot4,
    is_perfect_square,
    ord_p,
    unit_group_cyclic,
)
from .errors import CapacityError, InvalidWitnessError, NotCoprimeError, ShapeViolationError
from .lattice import (
    TernaryDiagonalLattice,
    admissible_mu,
    represents_everywhere_locally,
    ternary_represent,
)

CASE_I = "CaseI-odd-c"
CASE_II = "CaseII-even-c"
C_EQUALS_2 = "c-equals-2"

CONSTRUCTIVE = "constructive"
ORACLE = "oracle"


@dataclass(frozen=True)
class CoefficientPair:
    a: int
    b: int
    swapped: bool
    c: int
    shape: str
    p: int | None
    r_or_k: int
    factorization: Factorization

    @property
    def original(self) -> tuple[int, int]:
        """(a, b) in the order the caller gave them."""
        return (self.b, self.a) if self.swapped else (self.a, self.b)

    @property
    def lattice(self) -> TernaryDiagonalLattice:
        return TernaryDiagonalLattice.standard(self.c)


@dataclass(frozen=True)
class Decomposition:
    """x, y follow the caller's (a, b) order."""

    n: int
    x: int
    y: int
    z: int
    w: int
    m: int
    delta: int
    path: str

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)


@dataclass
class SolveOutcome:
    result: Decomposition | None = None
    attempts: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.result is not None


def validate_pair(a_in: int, b_in: int) -> CoefficientPair:
    if a_in < 1 or b_in < 1:
        raise ValueError("a and b must be positive integers")
    if math.gcd(a_in, b_in) != 1:
        raise NotCoprimeError(f"gcd({a_in}, {b_in}) = {math.gcd(a_in, b_in)} != 1")
    a, b = sorted((a_in, b_in))
    c = check_int64(a * a + b * b, "a^2+b^2")
    fac = factorize(c)
    if not unit_group_cyclic(c):
        raise ShapeViolationError(
            f"(Z/{c}Z)^x is not cyclic: {c} = {fac}", factorization=fac
        )
    odd = [(p, e) for p, e in fac.factors if p != 2]
    p, e = odd[0] if odd else (None, 0)
    if c == 2:
        shape = C_EQUALS_2
    elif c % 2:
        shape = CASE_I
    else:
        shape = CASE_II
    return CoefficientPair(a, b, a_in > b_in, c, shape, p, e, fac)


def split_16(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    delta = 0
    while n % 16 == 0:
        n //= 16
        delta += 1
    return delta, n


def _check_capacity(pair: CoefficientPair, n: int) -> None:
    if pair.c * n > INT64_MAX:
        raise CapacityError(f"c*n = {pair.c}*{n} exceeds the signed 64-bit range")


def candidate_m_values(pair: CoefficientPair, n1: int) -> list[int]:
    """Usable m, largest first: b^2 n1 <= m^4 <= c n1, m^2 in the admissible
    2-adic class, gcd(m, p) = 1, and ord_2(c n1 - m^4) <= 5 unless it is 0."""
    a, b, c = pair.a, pair.b, pair.c
    top = c * n1
    lo_target = b * b * n1
    m_lo = iroot4(lo_target)
    if m_lo**4 < lo_target:
        m_lo += 1
    m_lo = max(m_lo, 1)
    m_hi = iroot4(top)
    out = []
    for m in range(m_hi, m_lo - 1, -1):
        mu = m * m
        if not admissible_mu(c, n1, mu):
            continue
        if pair.p is not None and m % pair.p == 0:
            continue
        l = top - mu * mu
        if l != 0 and ord_p(2, l) > 5:
            continue
        out.append(m)
    return out


def reconstruct(pair: CoefficientPair, n1: int, m: int, rep, bezout=None):
    """Recover (x, y) with x^2+y^2+z^2+w^2 = n1 and a x + b y = m^2.

    ``rep`` is (u, z, w) solving u^2 + c z^2 + c w^2 = c n1 - m^4.  Any
    Bezout pair works; ``bezout`` overrides the one from ext_gcd.
    Returns None when neither u nor -u is congruent to a t - b s mod c.
    """
    a, b, c = pair.a, pair.b, pair.c
    u, z, w = rep
    mu = m * m
    if u * u + c * z * z + c * w * w != c * n1 - mu * mu:
        raise InvalidWitnessError(f"(u,z,w)={rep} does not represent c*n1 - m^4")
    if bezout is None:
        _, s0, t0 = ext_gcd(a, b)
    else:
        s0, t0 = bezout
        if a * s0 + b * t0 != 1:
            raise ValueError("bezout pair does not satisfy a*s0 + b*t0 = 1")
    s, t = mu * s0, mu * t0
    cross = a * t - b * s
    for eps in (1, -1):
        d = eps * u - cross
        if d % c == 0:
            k = d // c
            x, y = s - b * k, t + a * k
            if x * x + y * y + z * z + w * w != n1 or a * x + b * y != mu:
                raise AssertionError("reconstruction identity failed")  # unreachable
            return x, y
    return None


def positivity_ok(a: int, b: int, n: int, m_sq: int) -> bool:
    """m_sq >= sqrt(b^2 n), compared exactly; forces a x, b y >= 0 when a <= b."""
    return m_sq >= 0 and m_sq * m_sq >= b * b * n


def _orient(pair: CoefficientPair, x: int, y: int) -> tuple[int, int]:
    return (y, x) if pair.swapped else (x, y)


def solve_constructive(pair: CoefficientPair, n: int) -> SolveOutcome:
    if n < 1:
        raise ValueError("n must be positive")
    _check_capacity(pair, n)
    out = SolveOutcome()
    delta, n1 = split_16(n)
    candidates = candidate_m_values(pair, n1)
    if not candidates:
        out.attempts.append((0, "no-candidate-m"))
        return out
    lattice = pair.lattice
    for m in candidates:
        l = pair.c * n1 - m**4
        if not represents_everywhere_locally(lattice, l):
            out.attempts.append((m, "not-locally-represented"))
            continue
        rep = ternary_represent(lattice, l)
        if rep is None:
            out.attempts.append((m, "no-ternary-representation"))
            continue
        xy = reconstruct(pair, n1, m, rep)
        if xy is None:
            out.attempts.append((m, "no-matching-sign"))
            continue
        x, y = xy
        if not positivity_ok(pair.a, pair.b, n1, m * m) or x < 0 or y < 0:
            out.attempts.append((m, "negative-coordinate"))
            continue
        scale = 4**delta
        x, y = _orient(pair, x, y)
        _, z, w = rep
        out.result = Decomposition(
            n, scale * x, scale * y, scale * z, scale * w, 2**delta * m, delta, CONSTRUCTIVE
        )
        return out
    return out


def _oracle_at(pair: CoefficientPair, n: int, n_base: int, lift: int):
    from .oracle import has_restricted_representation

    a, b = pair.original
    found = has_restricted_representation(a, b, n_base)
    if found is None:
        return None
    s = 4**lift
    return Decomposition(
        n, s * found.x, s * found.y, s * found.z, s * found.w, 2**lift * found.m, lift, ORACLE
    )


def solve(pair: CoefficientPair, n: int, method: str = "hybrid") -> SolveOutcome:
    """Find a witness for n, reporting which path produced it.

    hybrid: constructive first, then exhaustive search at 16^j n1 for
    j = 0..d, lifting any hit by 4^(d-j).  Trying the smallest base first
    keeps solve(16 n) equal to solve(n) scaled by 4.
    """
    if method not in ("hybrid", CONSTRUCTIVE, ORACLE):
        raise ValueError(f"unknown method {method!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return SolveOutcome(Decomposition(0, 0, 0, 0, 0, 0, 0, ORACLE))
    _check_capacity(pair, n)
    out = SolveOutcome()
    if method != ORACLE:
        out = solve_constructive(pair, n)
        if out.ok or method == CONSTRUCTIVE:
            return out
    delta, n1 = split_16(n)
    for j in range(delta + 1):
        dec = _oracle_at(pair, n, n1 * 16**j, delta - j)
        if dec is not None:
            out.result = dec
            return out
        out.attempts.append((-1, f"oracle-exhausted-at-16^{j}*n1"))
    return out


def verify(pair: CoefficientPair, dec: Decomposition) -> bool:
    a, b = pair.original
    x, y, z, w = dec.coords
    if min(x, y, z, w) < 0:
        return False
    if x * x + y * y + z * z + w * w != dec.n:
        return False
    v = a * x + b * y
    return is_perfect_square(v) and v == dec.m * dec.m
