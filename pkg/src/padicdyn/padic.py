"""Exact p-adic arithmetic on rational numbers.

Every rational ``x != 0`` factors uniquely as ``p**v * n/m`` with ``n, m``
prime to ``p``; everything here (norms, digit expansions, square tests) is
read off that factorization with Python integers, so no precision is ever
lost.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .radius import ONE, ZERO, Radius

PRIME_BOUND = 10**6

Rationalish = Union[int, Fraction, str]


class PrimeMismatchError(ValueError):
    pass


@functools.lru_cache(maxsize=256)
def is_prime(n: int, bound: int = PRIME_BOUND) -> bool:
    """Deterministic trial division; primes at or above ``bound`` are refused."""
    if n < 2:
        return False
    if n >= bound:
        raise ValueError(f"prime {n} exceeds the supported bound {bound}")
    if n % 2 == 0:
        return n == 2
    for k in range(3, math.isqrt(n) + 1, 2):
        if n % k == 0:
            return False
    return True


def parse_rational(text: Rationalish) -> Fraction:
    """Parse ``"num/den"`` or an integer literal; floats are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        s = text.strip()
        if "." in s or "e" in s.lower():
            raise ValueError(f"expected an exact rational 'num/den', got {text!r}")
        return Fraction(s)
    raise TypeError(f"cannot read {type(text).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def int_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Union[int, Fraction], p: int) -> Union[int, float]:
    """γ(x): exponent of ``p`` in ``x``; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def split_unit(x: Fraction, p: int) -> Tuple[int, int, int]:
    """Return ``(v, n, m)`` with ``x = p**v * n/m``, ``m > 0`` and ``p ∤ n m``."""
    if x == 0:
        raise ValueError("0 has no unit part")
    n, m = x.numerator, x.denominator
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    while m % p == 0:
        m //= p
        v -= 1
    return v, n, m


def norm_of(x: Union[int, Fraction], p: int) -> Radius:
    v = valuation(x, p)
    if v == math.inf:
        return ZERO
    return Radius(Fraction(-v))


@dataclass(frozen=True)
class ExactPadic:
    """A rational number regarded as an element of Q_p."""

    p: int
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", parse_rational(self.value))
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def of(cls, p: int, value: Rationalish) -> "ExactPadic":
        return cls(p, parse_rational(value))

    def _coerce(self, other) -> Fraction:
        if isinstance(other, ExactPadic):
            if other.p != self.p:
                raise PrimeMismatchError(f"cannot combine Q_{self.p} with Q_{other.p}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other):
        return ExactPadic(self.p, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ExactPadic(self.p, self.value - self._coerce(other))

    def __rsub__(self, other):
        return ExactPadic(self.p, self._coerce(other) - self.value)

    def __mul__(self, other):
        return ExactPadic(self.p, self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        den = self._coerce(other)
        if den == 0:
            raise ZeroDivisionError("division by zero in Q_p")
        return ExactPadic(self.p, self.value / den)

    def __rtruediv__(self, other):
        if self.value == 0:
            raise ZeroDivisionError("division by zero in Q_p")
        return ExactPadic(self.p, self._coerce(other) / self.value)

    def __neg__(self):
        return ExactPadic(self.p, -self.value)

    def __pow__(self, k: int):
        return ExactPadic(self.p, self.value**k)

    def is_zero(self) -> bool:
        return self.value == 0

    def valuation(self) -> Union[int, float]:
        return valuation(self.value, self.p)

    def norm(self) -> Radius:
        return norm_of(self.value, self.p)

    def __str__(self) -> str:
        return format_rational(self.value)


def padic_norm(x: ExactPadic) -> Radius:
    """|x|_p as a radius: ``p^{-v}``, or the zero radius for ``x = 0``."""
    return x.norm()


def arith(x: ExactPadic, y: ExactPadic, op: str) -> ExactPadic:
    if x.p != y.p:
        raise PrimeMismatchError(f"cannot combine Q_{x.p} with Q_{y.p}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def unit_residue(n: int, m: int, p: int, k: int) -> int:
    """The unit ``n/m`` reduced modulo ``p**k``."""
    mod = p**k
    return (n * pow(m, -1, mod)) % mod


def digit_expansion(x: ExactPadic, count: int) -> Tuple[int, List[int]]:
    """Canonical expansion ``x = p^γ (x_0 + x_1 p + ...)`` truncated to ``count`` digits.

    Powers of ``p`` in the denominator are absorbed into ``γ``, so any
    nonzero rational is accepted.

    Returns:
        ``(γ, digits)`` with ``digits[0] != 0``.
    """
    if x.is_zero():
        raise ValueError("0 has no canonical expansion")
    if count < 1:
        raise ValueError("count must be positive")
    p = x.p
    v, n, m = split_unit(x.value, p)
    s = unit_residue(n, m, p, count)
    digits = []
    for _ in range(count):
        s, r = divmod(s, p)
        digits.append(r)
    return v, digits


def partial_sum(p: int, gamma: int, digits: List[int]) -> Fraction:
    return Fraction(p) ** gamma * sum(d * p**i for i, d in enumerate(digits))


def is_square(x: ExactPadic) -> bool:
    """Whether ``x`` is a square in Q_p.

    Even valuation plus a square unit: for odd ``p`` the unit must be a
    quadratic residue mod ``p`` (Euler's criterion), for ``p = 2`` it must
    be ``1 mod 8``.  Both conditions are sufficient by Hensel lifting.
    """
    if x.is_zero():
        return True
    p = x.p
    v, n, m = split_unit(x.value, p)
    if v % 2:
        return False
    # n/m is a square iff n*m is, since m^2 is a unit square.
    u = n * m
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1


def rational_sqrt(x: Fraction):
    """The nonnegative rational square root of ``x``, or ``None``."""
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


__all__ = [
    "ExactPadic",
    "ONE",
    "PrimeMismatchError",
    "arith",
    "digit_expansion",
    "format_rational",
    "is_prime",
    "is_square",
    "norm_of",
    "padic_norm",
    "parse_rational",
    "partial_sum",
    "rational_sqrt",
    "split_unit",
    "valuation",
]
