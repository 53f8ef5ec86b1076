from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.topology.contfrac import (
    ContinuedFraction,
    ExpansionStyle,
    Slope,
    cf_eval,
    cf_expand,
    coprime_pairs,
    montesinos_triple,
    montesinos_triple_cf,
    regular_expansion,
    regular_to_alternating,
)


def test_slope_is_canonical():
    assert Slope(2, -4) == Slope(-1, 2)
    assert Slope(-3, 0) == Slope.infinity()
    assert str(Slope(6, 4)) == "3/2"


def test_zero_over_zero_rejected():
    with pytest.raises(ValueError):
        Slope(0, 0)


def test_slope_parse():
    assert Slope.parse("3/5") == Slope(3, 5)
    assert Slope.parse("-7") == Slope(-7, 1)
    assert Slope.parse("inf").is_infinite
    with pytest.raises(ValueError):
        Slope.parse("trois")


def test_empty_continued_fraction_rejected():
    with pytest.raises(ValueError):
        ContinuedFraction(())


def test_cf_eval_small_values():
    assert cf_eval([2]) == Slope(-1, 2)
    assert cf_eval([1, 1, 1]) == Slope(0, 1)
    assert cf_eval(ContinuedFraction((3,))) == Slope(-1, 3)


def test_cf_eval_is_total_through_infinity():
    assert cf_eval([0]) == Slope.infinity()
    # [1, 0] passe par ∞ au milieu du calcul
    assert cf_eval([1, 0]) == Slope(0, 1)


def test_alternating_expansion_of_two_thirds():
    cf = cf_expand(Slope(2, 3), ExpansionStyle.ALTERNATING_NONNEGATIVE)
    assert cf.coeffs == (-1, 1, -1)


def test_regular_to_alternating_makes_length_odd():
    assert regular_expansion(Fraction(3, 2)) == [1, 2]
    assert regular_to_alternating([1, 2]) == [-1, 1, -1]
    assert regular_to_alternating([2]) == [-2]


def test_odd_length_expansion_of_zero_and_negative():
    assert cf_expand(Slope(0, 1)).coeffs == (0, 1, 1)
    assert cf_eval(cf_expand(Slope(-1, 2))) == Slope(-1, 2)


@pytest.mark.parametrize("slope", [Slope.infinity(), Slope(0, 1), Slope(-2, 3)])
def test_alternating_style_requires_positive_slope(slope):
    with pytest.raises(ValueError):
        cf_expand(slope, ExpansionStyle.ALTERNATING_NONNEGATIVE)


def test_cf_expand_rejects_infinity():
    with pytest.raises(ValueError):
        cf_expand(Slope.infinity())


def test_montesinos_triple_one_half():
    assert montesinos_triple(Slope(1, 2)) == (Slope(1, 1), Slope(-2, 3), Slope(-1, 3))
    minus_p, minus_q = montesinos_triple_cf(Slope(1, 2))
    assert minus_p.coeffs == (3,)
    assert minus_q.coeffs == (1, -2)
    assert cf_eval(minus_p) == Slope(-1, 3)
    assert cf_eval(minus_q) == Slope(-2, 3)


@pytest.mark.parametrize("slope", [Slope.infinity(), Slope(-1, 2)])
def test_montesinos_rejects_bad_input(slope):
    with pytest.raises(ValueError):
        montesinos_triple(slope)


def test_montesinos_zero_slope_uses_odd_length_form():
    minus_p, minus_q = montesinos_triple_cf(Slope(0, 1))
    assert cf_eval(minus_p) == Slope(0, 1)
    assert cf_eval(minus_q) == Slope(-1, 1)


def test_roundtrip_and_montesinos_on_coprime_range():
    for p, q in coprime_pairs(200):
        s = Slope(p, q)
        for style in ExpansionStyle:
            cf = cf_expand(s, style)
            assert len(cf) % 2 == 1
            assert cf_eval(cf) == s
        minus_p, minus_q = montesinos_triple_cf(s)
        assert cf_eval(minus_p).to_fraction() == Fraction(-p, p + q)
        assert cf_eval(minus_q).to_fraction() == Fraction(-q, p + q)


def test_alternating_coefficients_alternate_in_sign():
    for p, q in coprime_pairs(30):
        coeffs = cf_expand(Slope(p, q), ExpansionStyle.ALTERNATING_NONNEGATIVE).coeffs
        assert all(c <= 0 for c in coeffs[::2])
        assert all(c >= 0 for c in coeffs[1::2])


@settings(max_examples=500)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=8))
def test_append_identity(coeffs):
    extended = coeffs[:-1] + [coeffs[-1] + 1, 1]
    assert cf_eval(coeffs) == cf_eval(extended)
