import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from foursquares.arith import (
    Factorization,
    ext_gcd,
    factorize,
    is_perfect_square,
    is_prime,
    isqrt,
    legendre,
    ord_p,
    unit_group_cyclic,
)
from foursquares.errors import CapacityError

from oracles import cyclic_by_orders, square_set_mod, trial_factor, trial_is_prime


@pytest.mark.parametrize("n, expected", [(0, 0), (24, 4), (10**8, 10000)])
def test_isqrt_examples(n, expected):
    assert isqrt(n) == expected


def test_isqrt_bracket_up_to_1e6():
    n = np.arange(10**6 + 1, dtype=np.int64)
    r = np.array([isqrt(int(v)) for v in range(0, 10**6 + 1, 997)], dtype=np.int64)
    sub = n[::997]
    assert np.all(r * r <= sub) and np.all((r + 1) ** 2 > sub)


@pytest.mark.parametrize("n, expected", [(0, True), (49, True), (15, False), (-4, False)])
def test_is_perfect_square(n, expected):
    assert is_perfect_square(n) is expected


@pytest.mark.parametrize("p, n, expected", [(2, 24, 3), (2, 7, 0), (5, 250, 3), (3, -81, 4)])
def test_ord(p, n, expected):
    assert ord_p(p, n) == expected


def test_ord_zero_rejected():
    with pytest.raises(ValueError):
        ord_p(2, 0)


@pytest.mark.parametrize("a, b", [(1, 24), (3, 10), (4, 6), (-7, 3), (0, 5)])
def test_ext_gcd_identity(a, b):
    g, s, t = ext_gcd(a, b)
    assert g == math.gcd(a, b) and a * s + b * t == g


def test_ext_gcd_golden():
    assert ext_gcd(1, 24) == (1, 1, 0)


def test_ext_gcd_rejects_zero_pair():
    with pytest.raises(ValueError):
        ext_gcd(0, 0)


@given(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_ext_gcd_property(a, b):
    if a == 0 and b == 0:
        return
    g, s, t = ext_gcd(a, b)
    assert g > 0 and a * s + b * t == g and a % g == 0 and b % g == 0


@pytest.mark.parametrize("n, expected", [
    (577, ((577, 1),)),
    (65, ((5, 1), (13, 1))),
    (250, ((2, 1), (5, 3))),
])
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


def test_factorize_recomposes_up_to_1e6():
    for n in range(2, 10**6 + 1, 37):
        fac = factorize(n)
        assert fac.value == n
        assert all(is_prime(p) and e >= 1 for p, e in fac.factors)
        assert list(fac.primes) == sorted(set(fac.primes))


def test_factorize_matches_trial_division():
    for n in range(2, 5000):
        assert list(factorize(n).factors) == trial_factor(n)


def test_factorize_large_semiprime_uses_rho():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q).factors == ((p, 1), (q, 1))
    big = 2_147_483_647 * 2_147_483_629  # two primes just under 2^31
    assert factorize(big).value == big and len(factorize(big).factors) == 2


def test_factorize_rejects():
    with pytest.raises(ValueError):
        factorize(1)
    with pytest.raises(CapacityError):
        factorize(2**64)


def test_factorization_str():
    assert str(Factorization(((2, 1), (5, 3)))) == "2 * 5^3"


@pytest.mark.parametrize("n, expected", [(577, True), (1, False), (109, True), (0, False), (561, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert all(is_prime(n) == trial_is_prime(n) for n in range(-5, 20000))


def test_is_prime_strong_pseudoprimes():
    # strong pseudoprimes to several small bases
    for n in (2047, 3215031751, 3825123056546413051):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)


@pytest.mark.parametrize("a, p, expected", [(2, 5, -1), (0, 7, 0), (4, 13, 1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected


def test_legendre_matches_enumeration():
    for p in (q for q in range(3, 201) if trial_is_prime(q)):
        squares = square_set_mod(p) - {0}
        for a in range(-p, 2 * p):
            want = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre(a, p) == want


@pytest.mark.parametrize("p", [2, 9, 15])
def test_legendre_rejects(p):
    with pytest.raises(ValueError):
        legendre(1, p)


@pytest.mark.parametrize("l, expected", [(577, True), (65, False), (2, True), (4, True), (8, False), (50, True)])
def test_unit_group_cyclic_examples(l, expected):
    assert unit_group_cyclic(l) is expected


def test_unit_group_cyclic_brute_orders_up_to_1000():
    assert all(unit_group_cyclic(l) == cyclic_by_orders(l) for l in range(2, 1001))


def test_unit_group_cyclic_up_to_1e4():
    # (Z/l)^x is a product of cyclic groups, so it is cyclic iff x^2 = 1
    # has at most two roots; counted directly by enumeration.
    for l in range(2, 10**4 + 1):
        x = np.arange(l, dtype=np.int64)
        roots = np.count_nonzero((x * x) % l == 1 % l)
        assert unit_group_cyclic(l) == (roots <= 2), l


def test_unit_group_cyclic_random_large():
    rng = random.Random(7)
    for _ in range(200):
        l = rng.randrange(2, 10**6)
        assert unit_group_cyclic(l) == (sum(1 for u in range(l) if u * u % l == 1 % l) <= 2)
