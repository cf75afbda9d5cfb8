import math

import numpy as np
import pytest

from foursquares.arith import ord_p
from foursquares.errors import UnsupportedShapeError
from foursquares.lattice import (
    Reason,
    SpinorNormGroup,
    TernaryDiagonalLattice as L,
    admissible_mu,
    genus_equals_spinor_genus,
    local_represents,
    q2_excluded_case1,
    represents_everywhere_locally,
    spinor_norm_group,
    ternary_represent,
)
from foursquares.localfield import INFINITY, DiagonalSpace, Place, anisotropic_places

from oracles import DyadicOracle, global_values, mod_sumset_values

VALIDATED_C = [2, 5, 13, 25, 109, 577]


def test_lattice_type():
    lat = L.standard(577)
    assert (lat.d1, lat.d2, lat.d3) == (1, 577, 577)
    assert lat.discriminant == 577**2 and str(lat) == "<1,577,577>"
    with pytest.raises(ValueError):
        L(1, 0, 5)


@pytest.mark.parametrize("lattice", [L(1, 3, 3), L(1, 65, 65), L(1, 4, 4), L(2, 5, 5), L(1, 5, 13), L(1, 6, 6)])
def test_unsupported_shapes(lattice):
    with pytest.raises(UnsupportedShapeError):
        local_represents(lattice, 2, 1)
    with pytest.raises(UnsupportedShapeError):
        genus_equals_spinor_genus(lattice)


@pytest.mark.parametrize("lattice, v, t, expected, reason", [
    (L(1, 1, 1), 2, 7, False, Reason.DYADIC_CLASS),
    (L(1, 577, 577), 3, 5, True, Reason.UNIMODULAR_ALL),
    (L(1, 5, 5), 5, 10, True, Reason.ODD_P_SQUARE_CONDITION),
    (L(1, 2, 2), 2, 1, True, Reason.DYADIC_CLASS),
    (L(1, 5, 5), INFINITY, -1, False, Reason.ARCHIMEDEAN_SIGN),
    (L(1, 25, 25), 5, 5, False, Reason.ODD_P_SQUARE_CONDITION),  # ord 1 < r = 2, odd
    (L(1, 25, 25), 5, 2, False, Reason.ODD_P_SQUARE_CONDITION),  # 2 is not a square mod 5
    (L(1, 25, 25), 5, 4, True, Reason.ODD_P_SQUARE_CONDITION),
])
def test_local_represents_examples(lattice, v, t, expected, reason):
    rep = local_represents(lattice, v, t)
    assert rep.representable is expected and rep.reason is reason


def test_local_example_enumeration_10_on_155():
    assert 10 == 0**2 + 5 * 1**2 + 5 * 1**2


@pytest.mark.parametrize("t, expected", [(7, True), (28, True), (3, False), (0, False), (112, True), (14, False)])
def test_q2_excluded_examples(t, expected):
    assert q2_excluded_case1(t) is expected


def test_q2_excluded_vs_three_squares():
    hit = global_values((1, 1, 1), 10**4)
    for t in range(10**4 + 1):
        assert q2_excluded_case1(t) == (not hit[t])


def _dyadic(c, t):
    return local_represents(L.standard(c), 2, t).representable


def test_case2_predicate_vs_enumeration_mod_2_12():
    # residue enumeration mod 2^12 is exact while ord_2(t) + 5 <= 12
    vals = mod_sumset_values((1, 2, 2), 2**12)
    for t in range(1, 10**4 + 1):
        if ord_p(2, t) + 5 <= 12:
            assert _dyadic(2, t) == bool(vals[t % 4096]), t


@pytest.mark.parametrize("c", [1, 2, 5, 10, 13, 25, 26, 50, 58, 109, 250, 577, 1154])
def test_dyadic_predicate_vs_adaptive_enumeration(c):
    oracle = DyadicOracle(c)
    for t in range(0, 3000):
        assert _dyadic(c, t) == oracle(t), (c, t)


@pytest.mark.parametrize("coeffs, c", [((1, 1, 1), 1), ((1, 2, 2), 2)])
def test_class_number_one_forms_match_global_values(coeffs, c):
    # both forms are alone in their genus: local = global
    hit = global_values(coeffs, 10**4)
    for t in range(10**4 + 1):
        assert represents_everywhere_locally(L.standard(c), t) == bool(hit[t]), t


def _padic_oracle(c, p, r, t):
    k = ord_p(p, t) + r + 2
    if p**k > 2**21:
        return None
    return bool(mod_sumset_values((1, c, c), p**k)[t % p**k])


@pytest.mark.parametrize("c, p, r", [(5, 5, 1), (13, 13, 1), (25, 5, 2), (125, 5, 3), (109, 109, 1), (10, 5, 1)])
def test_odd_p_predicate_vs_enumeration(c, p, r):
    checked = 0
    for t in range(1, 4000):
        want = _padic_oracle(c, p, r, t)
        if want is None:
            continue
        checked += 1
        assert local_represents(L.standard(c), p, t).representable == want, (c, t)
    assert checked > 1000


@pytest.mark.parametrize("c, n1, mu, expected", [
    (577, 1, 4, True),
    (577, 5, 4, True),
    (577, 4, 4, False),
    (577, 12, 3, True),
    (2, 3, 9, True),
    (2, 3, 4, False),
    (577, 2, 7, True),
])
def test_admissible_mu_examples(c, n1, mu, expected):
    assert admissible_mu(c, n1, mu) is expected


def test_admissible_mu_rejects_high_two_power():
    with pytest.raises(ValueError):
        admissible_mu(5, 16, 1)


@pytest.mark.parametrize("c", [5, 577, 2, 10, 109])
def test_admissible_mu_implies_dyadic_representation(c):
    oracle = DyadicOracle(c)
    for n1 in range(1, 501):
        if ord_p(2, n1) > 3:
            continue
        for mu in range(math.isqrt(c * n1) + 1):
            if admissible_mu(c, n1, mu):
                l = c * n1 - mu * mu
                assert _dyadic(c, l) and oracle(l), (c, n1, mu)


@pytest.mark.parametrize("lattice, t, expected", [
    (L(1, 577, 577), 0, True),
    (L(1, 1, 1), 7, False),
    (L(1, 5, 5), 11, True),
    (L(1, 5, 5), -1, False),
])
def test_represents_everywhere_locally_examples(lattice, t, expected):
    assert represents_everywhere_locally(lattice, t) is expected


@pytest.mark.parametrize("c", VALIDATED_C)
def test_local_necessity(c):
    lat = L.standard(c)
    hit = global_values((1, c, c), 10**4)
    for t in np.flatnonzero(hit):
        assert represents_everywhere_locally(lat, int(t)), t


@pytest.mark.parametrize("lattice, p, expected", [
    (L(1, 577, 577), 3, SpinorNormGroup.UNITS_TIMES_SQUARES),
    (L(1, 577, 577), 577, SpinorNormGroup.CONTAINS_UNITS_TIMES_SQUARES),
    (L(1, 2, 2), 2, SpinorNormGroup.FULL_GROUP),
    (L(1, 577, 577), 2, SpinorNormGroup.FULL_GROUP),
])
def test_spinor_norm_group(lattice, p, expected):
    assert spinor_norm_group(lattice, p) is expected


@pytest.mark.parametrize("c", [577, 5, 2, 1, 10, 25])
def test_gen_equals_spn(c):
    assert genus_equals_spinor_genus(L.standard(c))


@pytest.mark.parametrize("c", VALIDATED_C + [10, 26, 50, 1154])
def test_only_finite_anisotropic_place_is_two(c):
    places = anisotropic_places(DiagonalSpace(1, c, c))
    assert {v for v in places if not v.is_infinite} == {Place(2)}


@pytest.mark.parametrize("lattice, t, expected", [
    (L(1, 5, 5), 14, (3, 0, 1)),  # (z, w) = (0, 1) precedes (1, 1)
    (L(1, 577, 577), 0, (0, 0, 0)),
    (L(1, 1, 1), 7, None),
    (L(1, 5, 5), 10, (0, 1, 1)),
    (L(1, 5, 5), -3, None),
])
def test_ternary_represent_examples(lattice, t, expected):
    assert ternary_represent(lattice, t) == expected


def test_fourteen_has_both_representations():
    assert 2**2 + 5 + 5 == 14 and 3**2 + 5 * 0 + 5 * 1 == 14


@pytest.mark.parametrize("c", [1, 2, 5, 13])
def test_ternary_represent_vs_brute(c):
    lat = L.standard(c)
    for t in range(0, 1500):
        brute = None
        for z in range(math.isqrt(t // c) + 1):
            for w in range(z, math.isqrt(t // c) + 1):
                rem = t - c * (z * z + w * w)
                if rem >= 0 and math.isqrt(rem) ** 2 == rem:
                    brute = (math.isqrt(rem), z, w)
                    break
            if brute:
                break
        assert ternary_represent(lat, t) == brute, (c, t)
