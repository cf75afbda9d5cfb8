"""Local and global representation by the ternary lattices <1> _|_ <c> _|_ <c>.

Only the shapes that come out of a coprime pair (a, b) with cyclic
(Z/cZ)^x are supported: c = 1, 2, p^r or 2p^k with p = 1 (mod 4).  For those
the local value sets are known in closed form, the only anisotropic finite
place is 2, and the genus has a single spinor genus.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .arith import check_int64, factorize, is_prime, legendre, ord_p
from .errors import UnsupportedShapeError
from .localfield import INFINITY, Place, _as_place


@dataclass(frozen=True)
class TernaryDiagonalLattice:
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        if min(self.d1, self.d2, self.d3) <= 0:
            raise ValueError("diagonal entries must be positive")

    @classmethod
    def standard(cls, c: int) -> "TernaryDiagonalLattice":
        return cls(1, c, c)

    @property
    def discriminant(self) -> int:
        return self.d1 * self.d2 * self.d3

    def __str__(self) -> str:
        return f"<{self.d1},{self.d2},{self.d3}>"


class SpinorNormGroup(enum.Enum):
    UNITS_TIMES_SQUARES = "UnitsTimesSquares"
    FULL_GROUP = "FullGroup"
    CONTAINS_UNITS_TIMES_SQUARES = "ContainsUnitsTimesSquares"

    @property
    def contains_units_times_squares(self) -> bool:
        return True


class Reason(str, enum.Enum):
    UNIMODULAR_ALL = "unimodular-all"
    ODD_P_SQUARE_CONDITION = "odd-p-square-condition"
    DYADIC_CLASS = "dyadic-class"
    ARCHIMEDEAN_SIGN = "archimedean-sign"


@dataclass(frozen=True)
class LocalRepReport:
    place: Place
    representable: bool
    reason: Reason


@dataclass(frozen=True)
class _Shape:
    c: int
    p: int | None  # odd prime dividing c
    r: int  # ord_p(c)
    dyadic_case: int  # 1 if c odd, 2 if c = 2 (mod 4)


def _shape(lattice: TernaryDiagonalLattice) -> _Shape:
    if lattice.d1 != 1 or lattice.d2 != lattice.d3:
        raise UnsupportedShapeError(f"{lattice} is not of the form <1,c,c>")
    c = lattice.d2
    if c % 4 == 0:
        raise UnsupportedShapeError(f"4 | {c}")
    odd = c if c % 2 else c // 2
    p, r = None, 0
    if odd > 1:
        fac = factorize(odd)
        if len(fac.factors) != 1:
            raise UnsupportedShapeError(f"{odd} is not a prime power ({fac})")
        p, r = fac.factors[0]
        if p % 4 != 1:
            raise UnsupportedShapeError(f"odd prime {p} dividing c is not 1 mod 4")
    return _Shape(c, p, r, 1 if c % 2 else 2)


def q2_excluded_case1(t: int) -> bool:
    """True iff t = 4^d (8k + 7), i.e. t is not a sum of three 2-adic squares."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return False
    while t % 4 == 0:
        t //= 4
    return t % 8 == 7


@lru_cache(maxsize=None)
def _primitive_residues_122() -> frozenset[int]:
    # values mod 32 of x^2+2y^2+2z^2 over primitive vectors mod 32
    out = set()
    for x, y, z in itertools.product(range(32), repeat=3):
        if x % 2 or y % 2 or z % 2:
            out.add((x * x + 2 * y * y + 2 * z * z) % 32)
    return frozenset(out)


def _dyadic_case2(t: int) -> bool:
    """t in Q(<1,2,2> over Z_2).

    Equivalent to solvability of x^2+2y^2+2z^2 = t mod 2^(ord_2(t)+5): a
    solution there factors as 2^j times a primitive vector with 2j <= ord_2(t),
    and a primitive solution mod 32 lifts because the gradient has 2-adic
    valuation at most 2.
    """
    if t == 0:
        return True
    prim = _primitive_residues_122()
    while True:
        if t % 32 in prim:
            return True
        if t % 4:
            return False
        t //= 4


def _odd_p_member(t: int, p: int, r: int) -> bool:
    # Q(L_p) = {x^2 + p^r y}; relies on -1 being a square mod p
    if t == 0:
        return True
    j = ord_p(p, t)
    if j >= r:
        return True
    if j % 2:
        return False
    return legendre(t // p**j, p) == 1


def local_represents(lattice: TernaryDiagonalLattice, v, t: int) -> LocalRepReport:
    """Decide t in Q(L_v) exactly for a supported <1,c,c>."""
    shape = _shape(lattice)
    v = _as_place(v)
    if v.is_infinite:
        return LocalRepReport(v, t >= 0, Reason.ARCHIMEDEAN_SIGN)
    p = v.prime
    if p == 2:
        if shape.dyadic_case == 1:
            ok = t == 0 or not _excluded_2adic(t)
        else:
            ok = _dyadic_case2(t)
        return LocalRepReport(v, ok, Reason.DYADIC_CLASS)
    if p == shape.p:
        return LocalRepReport(v, _odd_p_member(t, p, shape.r), Reason.ODD_P_SQUARE_CONDITION)
    return LocalRepReport(v, True, Reason.UNIMODULAR_ALL)


def _excluded_2adic(t: int) -> bool:
    # same as q2_excluded_case1 but valid for negative t too
    while t % 4 == 0:
        t //= 4
    return t % 8 == 7


def represents_everywhere_locally(lattice: TernaryDiagonalLattice, t: int) -> bool:
    shape = _shape(lattice)
    places = [INFINITY, Place(2)]
    if shape.p is not None:
        places.append(Place(shape.p))
    return all(local_represents(lattice, v, t).representable for v in places)


def admissible_mu(c: int, n1: int, mu: int) -> bool:
    """Whether mu lies in the congruence class that makes c*n1 - mu^2
    2-adically represented, given n1 with ord_2(n1) <= 3."""
    if n1 <= 0:
        raise ValueError("n1 must be positive")
    e = ord_p(2, n1)
    if e > 3:
        raise ValueError(f"ord_2(n1) = {e} > 3; split off powers of 16 first")
    if c % 2 == 1:
        if e == 0:
            return mu % 2 == 0 if n1 % 4 == 1 else mu % 2 == 1
        if e == 1:
            return True
        if e == 2:
            return mu % 2 == 1
        return mu % 4 == 0
    if c % 4 != 2:
        raise UnsupportedShapeError(f"4 | {c}")
    if e <= 1:
        return mu % 2 == 1
    if e == 2:
        return mu % 4 == 0
    return mu % 4 == 0 and (mu // 4) % 2 == ((c * n1 - 16) // 32) % 2


def spinor_norm_group(lattice: TernaryDiagonalLattice, p: int) -> SpinorNormGroup:
    """theta(O+(L_p)) for a supported <1,c,c>.

    odd q not dividing c: L_q is ternary unimodular, so units times squares.
    odd p dividing c: the binary unimodular component <eta, eta> already has
    units times squares as spinor norms.
    p = 2: the full group Q_2^x, in both dyadic cases.
    """
    shape = _shape(lattice)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return SpinorNormGroup.FULL_GROUP
    if p == shape.p:
        return SpinorNormGroup.CONTAINS_UNITS_TIMES_SQUARES
    return SpinorNormGroup.UNITS_TIMES_SQUARES


def spinor_places(lattice: TernaryDiagonalLattice) -> dict[int, SpinorNormGroup]:
    """Spinor norm group at every prime where L_p is not unimodular, plus 2."""
    shape = _shape(lattice)
    primes = [2] + ([shape.p] if shape.p is not None else [])
    return {p: spinor_norm_group(lattice, p) for p in primes}


def genus_equals_spinor_genus(lattice: TernaryDiagonalLattice) -> bool:
    """Z_p^x lies in theta(O+(L_p)) everywhere, hence gen(L) = spn(L).

    Unimodular odd places always satisfy this, so only 2 and the odd prime
    dividing c need checking.
    """
    return all(g.contains_units_times_squares for g in spinor_places(lattice).values())


def ternary_represent(lattice: TernaryDiagonalLattice, t: int):
    """First (u, z, w) with u^2 + c z^2 + c w^2 = t, z <= w, in (z, w) order.

    Returns None when t has no representation.
    """
    if lattice.d1 != 1 or lattice.d2 != lattice.d3:
        raise UnsupportedShapeError(f"{lattice} is not of the form <1,c,c>")
    if t < 0:
        return None
    check_int64(t, "t")
    if t == 0:
        return (0, 0, 0)
    u, z, w = _kernels.ternary_first(lattice.d2, t)
    if u < 0:
        return None
    return int(u), int(z), int(w)
