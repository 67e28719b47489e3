from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padicdyn.radius import ONE, ZERO, Radius, rmax

exps = st.fractions(min_value=-20, max_value=20, max_denominator=4)
radii = st.one_of(st.just(ZERO), exps.map(Radius))


def test_zero_below_every_power():
    assert ZERO < Radius(-1000)
    assert not Radius(-1000) < ZERO
    assert ZERO == Radius(None)


@given(exps, exps)
def test_order_follows_exponent(e1, e2):
    assert (Radius(e1) < Radius(e2)) == (e1 < e2)


@given(exps, exps)
def test_product_adds_exponents(e1, e2):
    assert Radius(e1) * Radius(e2) == Radius(e1 + e2)
    assert Radius(e1) / Radius(e2) == Radius(e1 - e2)


@given(radii)
def test_sqrt_squares_back(r):
    assert r.sqrt() ** 2 == r


def test_value_and_text():
    assert Radius(-2).value(3) == Fraction(1, 9)
    assert str(Radius(Fraction(1, 2))) == "p^1/2"
    assert str(ZERO) == "0"
    assert ZERO.value(5) == 0


@given(radii)
def test_parse_inverts_str(r):
    assert Radius.parse(str(r)) == r


def test_integral_flags_realizable_spheres():
    assert Radius(3).is_integral
    assert not Radius(Fraction(-1, 2)).is_integral


def test_rmax():
    assert rmax(ZERO, Radius(-3), ONE) == ONE
    with pytest.raises((ValueError, TypeError)):
        Radius.parse("3^2")
