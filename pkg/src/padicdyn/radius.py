"""Radii in p^Q together with zero.

A radius is either exactly zero or ``p**exp`` for a rational exponent.  The
prime is deliberately not stored: radii coming from different norms of the
same field compare by exponent alone, and keeping them prime-free lets the
radius dynamics be tested on abstract exponent grids.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Exponent = Union[int, Fraction]


@functools.total_ordering
@dataclass(frozen=True)
class Radius:
    """An element of ``p^Q ∪ {0}``; ``exp is None`` encodes zero."""

    exp: Optional[Fraction]

    def __post_init__(self):
        if self.exp is not None and not isinstance(self.exp, Fraction):
            object.__setattr__(self, "exp", Fraction(self.exp))

    @classmethod
    def power(cls, exp: Exponent) -> "Radius":
        return cls(Fraction(exp))

    @classmethod
    def zero(cls) -> "Radius":
        return cls(None)

    @classmethod
    def one(cls) -> "Radius":
        return cls(Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    @property
    def is_integral(self) -> bool:
        """True when the radius belongs to the value group of Q_p."""
        return self.exp is None or self.exp.denominator == 1

    def __lt__(self, other: "Radius") -> bool:
        if not isinstance(other, Radius):
            return NotImplemented
        if self.exp is None:
            return other.exp is not None
        if other.exp is None:
            return False
        return self.exp < other.exp

    def __mul__(self, other: "Radius") -> "Radius":
        if not isinstance(other, Radius):
            return NotImplemented
        if self.exp is None or other.exp is None:
            return ZERO
        return Radius(self.exp + other.exp)

    def __truediv__(self, other: "Radius") -> "Radius":
        if not isinstance(other, Radius):
            return NotImplemented
        if other.exp is None:
            raise ZeroDivisionError("division by the zero radius")
        if self.exp is None:
            return ZERO
        return Radius(self.exp - other.exp)

    def __pow__(self, k: int) -> "Radius":
        if self.exp is None:
            if k <= 0:
                raise ZeroDivisionError("non-positive power of the zero radius")
            return ZERO
        return Radius(self.exp * k)

    def sqrt(self) -> "Radius":
        if self.exp is None:
            return ZERO
        return Radius(self.exp / 2)

    def value(self, p: int) -> Fraction:
        """The real number this radius denotes, when the exponent is integral."""
        if self.exp is None:
            return Fraction(0)
        if self.exp.denominator != 1:
            raise ValueError(f"p^{self.exp} is irrational")
        return Fraction(p) ** int(self.exp)

    def __str__(self) -> str:
        if self.exp is None:
            return "0"
        return f"p^{self.exp}"

    def __repr__(self) -> str:
        return f"Radius({self})"

    def to_json(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, text: str) -> "Radius":
        """Inverse of ``str``: ``"0"`` or ``"p^e"``."""
        text = text.strip()
        if text == "0":
            return ZERO
        if not text.startswith("p^"):
            raise ValueError(f"not a radius: {text!r}")
        return cls(Fraction(text[2:]))


ZERO = Radius(None)
ONE = Radius(Fraction(0))


def rmax(*radii: Radius) -> Radius:
    return max(radii)
