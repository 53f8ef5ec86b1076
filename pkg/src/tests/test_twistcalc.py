import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import ImmutableMatrix

from src.topology.contfrac import Slope, cf_eval
from src.topology.twistcalc import (
    PHI_LAMBDA,
    PHI_MU,
    CurveClass,
    TwistWord,
    intersection_profile,
    stability_threshold,
    twist_family_slope,
    twist_matrix,
    twist_slope,
)


def test_even_length_word_gets_leading_zero():
    assert TwistWord((2, 3)).coeffs == (0, 2, 3)
    assert TwistWord((4,)).coeffs == (4,)


def test_twist_matrix_generators():
    assert twist_matrix(TwistWord((1,))) == PHI_LAMBDA
    assert twist_matrix(TwistWord((1, 0))) == PHI_MU
    assert twist_matrix(TwistWord((0,))) == ImmutableMatrix([[1, 0], [0, 1]])


def test_twist_matrix_is_unimodular():
    rng = random.Random(7)
    for _ in range(50):
        coeffs = tuple(rng.randint(-4, 4) for _ in range(rng.choice((1, 3, 5))))
        assert twist_matrix(TwistWord(coeffs)).det() == 1


def test_twist_slope_of_one_one_one():
    assert twist_slope(TwistWord((1, 1, 1))) == Slope(0, 1)
    assert cf_eval([1, 1, 1]) == Slope(0, 1)


def test_twist_slope_matches_cf_eval_on_random_words():
    rng = random.Random(20240613)
    for _ in range(1000):
        coeffs = tuple(rng.randint(-5, 5) for _ in range(rng.choice((1, 3, 5, 7, 9))))
        assert twist_slope(TwistWord(coeffs)) == cf_eval(coeffs)


def test_curve_class_validation():
    with pytest.raises(ValueError):
        CurveClass(0, 0)
    with pytest.raises(ValueError):
        CurveClass(2, 4)
    with pytest.raises(ValueError):
        CurveClass.parse("1;2")


def test_curve_class_equality_is_projective():
    assert CurveClass(1, -2) == CurveClass(-1, 2)
    assert hash(CurveClass(1, -2)) == hash(CurveClass(-1, 2))
    # le représentant orienté est conservé
    assert CurveClass(1, -2).mu_coeff == 1


def test_twist_family_slope():
    assert twist_family_slope(CurveClass(1, 1), CurveClass(0, 1), 2) == CurveClass(1, 3)


def test_non_unimodular_pair_rejected():
    with pytest.raises(ValueError):
        intersection_profile(CurveClass(1, 0), CurveClass(1, 0), 1)


def test_intersection_profile_same_sign():
    assert intersection_profile(CurveClass(1, 1), CurveClass(0, 1), 2) == (3, 1, 4)


def test_intersection_profile_opposite_signs_and_zero():
    K, L = CurveClass(1, -1), CurveClass(0, 1)
    assert intersection_profile(K, L, 0) == (1, 1, 0)
    # zéro compte comme du même signe
    assert intersection_profile(K, L, 1) == (0, 1, 1)
    assert intersection_profile(K, L, 2) == (1, 1, 2)
    assert intersection_profile(K, L, 3) == (2, 1, 3)


def test_stability_threshold():
    assert stability_threshold(CurveClass(1, -1), CurveClass(0, 1), 10) == 3


def test_stability_threshold_bound_too_small():
    with pytest.raises(ValueError):
        stability_threshold(CurveClass(1, -1), CurveClass(0, 1), 2)
    with pytest.raises(ValueError):
        # seul n = 3 est stable : aucun N0 sous la borne
        stability_threshold(CurveClass(1, -1), CurveClass(0, 1), 3)
    with pytest.raises(ValueError):
        stability_threshold(CurveClass(1, -1), CurveClass(0, 1), 0)



@pytest.mark.parametrize("K, L, N, expected", [
    ((1, 0), (0, 1), 5, (1, 5)),
    ((1, 1), (1, 2), 1, (2, 3)),
])
def test_twist_family_slope_examples(K, L, N, expected):
    assert twist_family_slope(CurveClass(*K), CurveClass(*L), N) == CurveClass(*expected)


@pytest.mark.parametrize("K, L, n, expected", [
    ((1, 0), (0, 1), 3, (3, 1, 4)),
    ((2, -1), (1, 0), 1, (1, 3, 2)),
    ((1, 1), (1, 2), 0, (1, 1, 2)),
])
def test_intersection_profile_examples(K, L, n, expected):
    assert intersection_profile(CurveClass(*K), CurveClass(*L), n) == expected


def test_stability_threshold_of_the_basis_pair():
    assert stability_threshold(CurveClass(1, 0), CurveClass(0, 1), 100) == 2


def unimodular_pair(coeffs):
    """Colonnes d'une matrice de SL(2,Z) : K = (a, c), L = (b, d)."""
    m = twist_matrix(TwistWord(tuple(coeffs)))
    return CurveClass(int(m[0, 0]), int(m[1, 0])), CurveClass(int(m[0, 1]), int(m[1, 1]))


twist_words = st.lists(st.integers(-4, 4), min_size=1, max_size=5)


@settings(max_examples=300, deadline=None)
@given(twist_words, st.integers(-30, 30))
def test_profile_coordinates_are_coprime(coeffs, n):
    K, L = unimodular_pair(coeffs)
    d_mu, d_lambda, _ = intersection_profile(K, L, n)
    assert gcd(d_mu, d_lambda) == 1
    assert d_mu % 2 == 1 or d_lambda % 2 == 1


@settings(max_examples=300, deadline=None)
@given(twist_words, st.integers(-30, 30))
def test_profile_positivity_and_parity(coeffs, n):
    K, L = unimodular_pair(coeffs)
    d_mu, d_lambda, d_nu = intersection_profile(K, L, n)
    assert min(d_mu, d_lambda, d_nu) >= 0
    assert (d_nu - d_mu - d_lambda) % 2 == 0


@settings(max_examples=300, deadline=None)
@given(twist_words, st.integers(-30, 30))
def test_twist_family_slope_is_reduced(coeffs, N):
    K, L = unimodular_pair(coeffs)
    family = twist_family_slope(K, L, N)
    assert gcd(family.mu_coeff, family.lambda_coeff) == 1
    assert family == CurveClass(K.mu_coeff + N * L.mu_coeff, K.lambda_coeff + N * L.lambda_coeff)
