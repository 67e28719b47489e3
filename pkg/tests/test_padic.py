from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import assume, given, settings, strategies as st

from padicdyn.padic import (
    ExactPadic,
    PrimeMismatchError,
    arith,
    digit_expansion,
    format_rational,
    is_prime,
    is_square,
    norm_of,
    padic_norm,
    parse_rational,
    partial_sum,
    valuation,
)
from padicdyn.radius import ZERO, Radius

PRIMES = [2, 3, 5, 7]
rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)
nonzero = rationals.filter(lambda q: q != 0)
primes = st.sampled_from(PRIMES)


def base_p_trailing_zeros(n: int, p: int) -> int:
    """Oracle: count trailing zeros of |n| written in base p."""
    n = abs(n)
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    k = 0
    while digits[k] == 0:
        k += 1
    return k


@lru_cache(maxsize=None)
def unit_squares(p: int, k: int = 6) -> frozenset:
    mod = p**k
    return frozenset(y * y % mod for y in range(mod) if y % p)


def brute_is_square(q: Fraction, p: int) -> bool:
    if q == 0:
        return True
    v = base_p_trailing_zeros(q.numerator, p) - base_p_trailing_zeros(q.denominator, p)
    if v % 2:
        return False
    n = q.numerator // p ** base_p_trailing_zeros(q.numerator, p)
    m = q.denominator // p ** base_p_trailing_zeros(q.denominator, p)
    mod = p**6
    return n * pow(m, -1, mod) % mod in unit_squares(p)


def test_norm_examples():
    assert padic_norm(ExactPadic(3, Fraction(6, 5))) == Radius(-1)
    assert padic_norm(ExactPadic(5, Fraction(0))) == ZERO
    assert padic_norm(ExactPadic(2, Fraction(9, 4))) == Radius(2)


def test_prime_checked_at_construction():
    with pytest.raises(ValueError):
        ExactPadic(4, Fraction(1))
    with pytest.raises(ValueError):
        is_prime(1_000_003)
    assert is_prime(999_983)


def test_parse_rejects_floats_and_formats_with_denominator():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational("12") == 12
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(TypeError):
        parse_rational(0.5)
    assert format_rational(Fraction(4)) == "4/1"


def test_arith_examples():
    half, third = ExactPadic(3, Fraction(1, 2)), ExactPadic(3, Fraction(1, 3))
    assert arith(half, third, "add").value == Fraction(5, 6)
    assert arith(half, ExactPadic(3, Fraction(0)), "mul").is_zero()
    assert arith(third, third, "div").value == 1
    with pytest.raises(ZeroDivisionError):
        arith(half, ExactPadic(3, Fraction(0)), "div")
    with pytest.raises(PrimeMismatchError):
        arith(half, ExactPadic(5, Fraction(1)), "add")


@given(nonzero, primes)
def test_valuation_matches_base_p_oracle(q, p):
    oracle = base_p_trailing_zeros(q.numerator, p) - base_p_trailing_zeros(q.denominator, p)
    assert valuation(q, p) == oracle
    assert norm_of(q, p) == Radius(-oracle)


@given(rationals, primes)
def test_norm_zero_iff_zero(q, p):
    assert (padic_norm(ExactPadic(p, q)) == ZERO) == (q == 0)


@given(rationals, rationals, primes)
def test_multiplicative(x, y, p):
    assert norm_of(x * y, p) == norm_of(x, p) * norm_of(y, p)


@given(rationals, rationals, primes)
def test_strong_triangle(x, y, p):
    nx, ny, s = norm_of(x, p), norm_of(y, p), norm_of(x + y, p)
    assert s <= max(nx, ny)
    if nx != ny:
        assert s == max(nx, ny)
    else:
        assert s <= nx


def test_digit_expansion_examples():
    assert digit_expansion(ExactPadic(2, Fraction(7)), 3) == (0, [1, 1, 1])
    assert digit_expansion(ExactPadic(3, Fraction(2)), 2) == (0, [2, 0])
    gamma, digits = digit_expansion(ExactPadic(5, Fraction(1, 3)), 3)
    assert gamma == 0
    assert norm_of(Fraction(1, 3) - partial_sum(5, gamma, digits), 5) <= Radius(-3)
    # 1/3 = 2 + 3*5 + 1*25 + ... since 3 * 2 = 6 = 1 + 5, etc.
    assert digits == [2, 3, 1]
    with pytest.raises(ValueError):
        digit_expansion(ExactPadic(5, Fraction(0)), 3)


def test_digit_expansion_absorbs_p_in_denominator():
    assert digit_expansion(ExactPadic(3, Fraction(1, 3)), 3) == (-1, [1, 0, 0])


@given(nonzero, primes, st.integers(1, 30))
def test_digit_expansion_residual(q, p, count):
    gamma, digits = digit_expansion(ExactPadic(p, q), count)
    assert digits[0] != 0 and all(0 <= d < p for d in digits)
    assert norm_of(q - partial_sum(p, gamma, digits), p) <= Radius(-gamma - count)


def test_is_square_examples():
    assert not is_square(ExactPadic(2, Fraction(2)))
    assert is_square(ExactPadic(7, Fraction(4)))
    assert is_square(ExactPadic(2, Fraction(17)))
    assert not is_square(ExactPadic(7, Fraction(-1)))
    assert is_square(ExactPadic(5, Fraction(-1)))
    assert is_square(ExactPadic(3, Fraction(0)))


@settings(max_examples=800)
@given(rationals, primes)
def test_is_square_matches_brute_force_mod_p6(q, p):
    assert is_square(ExactPadic(p, q)) == brute_is_square(q, p)


@given(nonzero, primes)
def test_squares_are_squares(q, p):
    assert is_square(ExactPadic(p, q * q))
