"""Fixed relative-precision p-adic numbers.

A nonzero ``FixedPadic`` stands for ``p**valuation * unit`` where only
``unit mod p**precision`` is known.  Absolute precision is therefore
``valuation + precision``; addition keeps the smaller absolute precision
and leading-digit cancellation eats relative digits.  When cancellation
consumes every known digit the result is indistinguishable from zero and
``InsufficientPrecision`` is raised instead of returning a silent zero.

Exact zero (coming from an exact zero input) is a separate value with
infinite precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .padic import ExactPadic, PrimeMismatchError, split_unit, unit_residue
from .radius import ZERO, Radius


class InsufficientPrecision(ArithmeticError):
    """A result has no known nonzero digit at the working precision."""


@dataclass(frozen=True)
class FixedPadic:
    p: int
    valuation: Optional[int]
    unit: int
    precision: Optional[int]

    @classmethod
    def exact_zero(cls, p: int) -> "FixedPadic":
        return cls(p, None, 0, None)

    @property
    def is_exact_zero(self) -> bool:
        return self.valuation is None

    @property
    def absolute_precision(self) -> Optional[int]:
        if self.valuation is None:
            return None
        return self.valuation + self.precision

    @property
    def digits(self) -> List[int]:
        out, s = [], self.unit
        for _ in range(self.precision or 0):
            s, r = divmod(s, self.p)
            out.append(r)
        return out

    def norm(self) -> Radius:
        if self.valuation is None:
            return ZERO
        return Radius(Fraction(-self.valuation))

    def to_fraction(self) -> Fraction:
        """A rational representative (the truncated canonical series)."""
        if self.valuation is None:
            return Fraction(0)
        return Fraction(self.p) ** self.valuation * self.unit

    def _check(self, other: "FixedPadic") -> None:
        if not isinstance(other, FixedPadic):
            raise TypeError(f"unsupported operand {type(other).__name__}")
        if other.p != self.p:
            raise PrimeMismatchError(f"cannot combine Q_{self.p} with Q_{other.p}")

    def __neg__(self) -> "FixedPadic":
        if self.valuation is None:
            return self
        mod = self.p**self.precision
        return FixedPadic(self.p, self.valuation, (-self.unit) % mod, self.precision)

    def __add__(self, other: "FixedPadic") -> "FixedPadic":
        self._check(other)
        if self.valuation is None:
            return other
        if other.valuation is None:
            return self
        p = self.p
        v = min(self.valuation, other.valuation)
        absolute = min(self.absolute_precision, other.absolute_precision)
        width = absolute - v
        s = (self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)) % p**width
        if s == 0:
            raise InsufficientPrecision(
                f"sum vanishes modulo p^{absolute}; no known digit survives"
            )
        k = 0
        while s % p == 0:
            s //= p
            k += 1
        return FixedPadic(p, v + k, s, width - k)

    def __sub__(self, other: "FixedPadic") -> "FixedPadic":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "FixedPadic") -> "FixedPadic":
        self._check(other)
        if self.valuation is None or other.valuation is None:
            return FixedPadic.exact_zero(self.p)
        n = min(self.precision, other.precision)
        return FixedPadic(self.p, self.valuation + other.valuation,
                          (self.unit * other.unit) % self.p**n, n)

    def __truediv__(self, other: "FixedPadic") -> "FixedPadic":
        self._check(other)
        if other.valuation is None:
            raise ZeroDivisionError("division by exact zero")
        if self.valuation is None:
            return self
        n = min(self.precision, other.precision)
        mod = self.p**n
        return FixedPadic(self.p, self.valuation - other.valuation,
                          (self.unit * pow(other.unit, -1, mod)) % mod, n)

    def agrees_with(self, other: "FixedPadic") -> bool:
        """Equal on every digit both operands claim to know."""
        self._check(other)
        if self.valuation is None or other.valuation is None:
            return self.valuation is None and other.valuation is None
        if self.valuation != other.valuation:
            return False
        n = min(self.precision, other.precision)
        return self.unit % self.p**n == other.unit % self.p**n

    def __str__(self) -> str:
        if self.valuation is None:
            return "0"
        digits = "".join(str(d) if self.p <= 10 else f"[{d}]" for d in self.digits)
        return f"p^{self.valuation}*({digits})_{self.p} +O(p^{self.absolute_precision})"


def fixed_from_exact(x: ExactPadic, precision: int) -> FixedPadic:
    """Truncate an exact rational to ``precision`` unit digits."""
    if precision < 1:
        raise ValueError("precision must be at least one digit")
    if x.is_zero():
        return FixedPadic.exact_zero(x.p)
    v, n, m = split_unit(x.value, x.p)
    return FixedPadic(x.p, v, unit_residue(n, m, x.p, precision), precision)


def fixed_arith(x: FixedPadic, y: FixedPadic, op: str) -> FixedPadic:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")
