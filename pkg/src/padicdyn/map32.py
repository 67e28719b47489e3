"""The (3,2)-rational map f(x) = (x^3 + a x^2 + b x + c) / (x^2 + a x + d).

Writing N(x) = x^2 + a x + b and Q(x) = x^2 + a x + d, one has
f(x) - x = (b - d)(x - x0) / Q(x) with x0 = c/(d - b), hence

    f(x) - x0 = (x - x0) * N(x) / Q(x).

That factorization drives the fixed-precision orbit (it avoids the
cancellation of recomputing x - x0 at every step); exact evaluation uses
the rational form directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple

from .fixed import FixedPadic, InsufficientPrecision, fixed_from_exact
from .padic import ExactPadic, Rationalish, is_square, parse_rational, rational_sqrt
from .radius import ONE, Radius

DEFAULT_BIT_BUDGET = 10**6


class InvalidParams(ValueError):
    """A parameter tuple violates a construction invariant."""


class SingularInput(ValueError):
    """The point is a root of the denominator x^2 + a x + d."""


@dataclass(frozen=True)
class MapParams:
    a: ExactPadic
    b: ExactPadic
    c: ExactPadic
    d: ExactPadic

    def __post_init__(self):
        primes = {self.a.p, self.b.p, self.c.p, self.d.p}
        if len(primes) != 1:
            raise InvalidParams(f"coefficients live over different primes {sorted(primes)}")
        if self.b.value == self.d.value:
            raise InvalidParams("b ≠ d is required (otherwise f has no fixed point)")
        if self.denominator(self.x0.value) == 0:
            raise InvalidParams(
                "x0 = c/(d-b) is a root of x^2 + a x + d, so f is undefined at its fixed point"
            )

    @classmethod
    def of(cls, p: int, a: Rationalish, b: Rationalish, c: Rationalish, d: Rationalish):
        return cls(*(ExactPadic(p, parse_rational(v)) for v in (a, b, c, d)))

    @property
    def p(self) -> int:
        return self.a.p

    @cached_property
    def x0(self) -> ExactPadic:
        return ExactPadic(self.p, self.c.value / (self.d.value - self.b.value))

    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.a.value, self.b.value, self.c.value, self.d.value

    def numerator(self, x: Fraction) -> Fraction:
        a, b, c, _ = self.coefficients()
        return ((x + a) * x + b) * x + c

    def denominator(self, x: Fraction) -> Fraction:
        a, _, _, d = self.coefficients()
        return (x + a) * x + d

    def to_json(self) -> dict:
        return {"p": self.p, "a": str(self.a), "b": str(self.b), "c": str(self.c), "d": str(self.d)}


def fixed_point(params: MapParams) -> ExactPadic:
    return params.x0


@dataclass(frozen=True)
class SingularPoints:
    """Roots of x^2 + a x + d.

    ``roots`` holds the rational roots only.  ``in_qp`` tells whether the
    roots exist in Q_p at all; when they do but are irrational no rational
    orbit can ever reach them.
    """

    roots: Tuple[ExactPadic, ...]
    in_qp: bool
    double: bool
    rational: bool

    def to_json(self) -> dict:
        return {
            "roots": [str(r) for r in self.roots],
            "in_Qp": self.in_qp,
            "double": self.double,
            "rational": self.rational,
        }


def singular_points(params: MapParams) -> SingularPoints:
    p = params.p
    a, _, _, d = params.coefficients()
    disc = a * a - 4 * d
    if disc == 0:
        return SingularPoints((ExactPadic(p, -a / 2),), True, True, True)
    if not is_square(ExactPadic(p, disc)):
        return SingularPoints((), False, False, False)
    s = rational_sqrt(disc)
    if s is None:
        return SingularPoints((), True, False, False)
    roots = tuple(sorted((ExactPadic(p, (-a + s) / 2), ExactPadic(p, (-a - s) / 2)),
                         key=lambda r: r.value))
    return SingularPoints(roots, True, False, True)


def eval_f(params: MapParams, x: ExactPadic) -> ExactPadic:
    q = params.denominator(x.value)
    if q == 0:
        raise SingularInput(f"x = {x} is a root of x^2 + a x + d")
    return ExactPadic(params.p, params.numerator(x.value) / q)


class Stop(enum.Enum):
    COMPLETED = "Completed"
    HIT_SINGULARITY = "HitSingularity"
    PRECISION_LOSS = "PrecisionLoss"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass
class OrbitRecord:
    """Points x_0..x_k of an orbit and their distances |x_i - x0|_p.

    ``stop_step`` is the index of the step that could not be taken (the
    singular point was x_{stop_step}, or precision ran out computing
    x_{stop_step+1}); it is ``None`` for completed orbits.
    """

    points: list
    radii: List[Radius]
    stop: Stop = Stop.COMPLETED
    stop_step: Optional[int] = None
    offsets: Optional[List[FixedPadic]] = field(default=None, repr=False)

    @property
    def in_P(self) -> bool:
        return self.stop is Stop.HIT_SINGULARITY

    def termination(self) -> str:
        if self.stop is Stop.COMPLETED:
            return self.stop.value
        return f"{self.stop.value}({self.stop_step})"


def orbit(params: MapParams, x: ExactPadic, n: int,
          bit_budget: int = DEFAULT_BIT_BUDGET) -> OrbitRecord:
    """Iterate f exactly from ``x`` for up to ``n`` steps."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x0 = params.x0
    rec = OrbitRecord([x], [(x - x0).norm()])
    for k in range(n):
        try:
            x = eval_f(params, x)
        except SingularInput:
            rec.stop, rec.stop_step = Stop.HIT_SINGULARITY, k
            return rec
        rec.points.append(x)
        rec.radii.append((x - x0).norm())
        if max(x.value.numerator.bit_length(), x.value.denominator.bit_length()) > bit_budget:
            rec.stop, rec.stop_step = Stop.BUDGET_EXCEEDED, k + 1
            return rec
    return rec


@dataclass(frozen=True)
class _FixedConstants:
    x0: FixedPadic
    two_e: FixedPadic      # 2 x0 + a
    n_x0: FixedPadic       # N(x0)
    q_x0: FixedPadic       # Q(x0)


def _fixed_constants(params: MapParams, precision: int) -> _FixedConstants:
    p = params.p
    a, b, _, d = params.coefficients()
    x0 = params.x0.value

    def fx(v: Fraction) -> FixedPadic:
        return fixed_from_exact(ExactPadic(p, v), precision)

    return _FixedConstants(
        fx(x0), fx(2 * x0 + a), fx(x0 * x0 + a * x0 + b), fx(x0 * x0 + a * x0 + d)
    )


def offset_orbit_fixed(params: MapParams, y: FixedPadic, n: int, precision: int,
                       stop_when=None) -> OrbitRecord:
    """Fixed-precision orbit parametrized by the offset ``y = x - x0``.

    Uses y' = y (N(x0) + y (2x0 + a + y)) / (Q(x0) + y (2x0 + a + y)),
    which is f(x) - x0 rewritten around the fixed point.  Only genuine
    cancellation in N or Q costs digits.  ``stop_when(radius)`` ends the
    orbit early (reported as completed) once it returns true.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = _fixed_constants(params, precision)

    def point(off: FixedPadic):
        try:
            return k.x0 + off
        except InsufficientPrecision:
            return None

    rec = OrbitRecord([point(y)], [y.norm()], offsets=[y])
    for step in range(n):
        if stop_when is not None and stop_when(rec.radii[-1]):
            break
        if y.is_exact_zero:
            rec.points.append(rec.points[-1])
            rec.radii.append(rec.radii[-1])
            rec.offsets.append(y)
            continue
        try:
            t = y * (k.two_e + y)
            num = k.n_x0 + t
            den = k.q_x0 + t
            y = y * num / den
        except InsufficientPrecision:
            rec.stop, rec.stop_step = Stop.PRECISION_LOSS, step
            return rec
        rec.points.append(point(y))
        rec.radii.append(y.norm())
        rec.offsets.append(y)
    return rec


def orbit_fixed_precision(params: MapParams, x: FixedPadic, n: int) -> OrbitRecord:
    """Fixed-precision orbit from ``x``, at the precision ``x`` carries."""
    if x.is_exact_zero:
        precision = 64
    else:
        precision = x.precision
    k = _fixed_constants(params, precision)
    try:
        y = x - k.x0
    except InsufficientPrecision:
        return OrbitRecord([x], [], Stop.PRECISION_LOSS, 0)
    return offset_orbit_fixed(params, y, n, precision)


class Character(enum.Enum):
    ATTRACTING = "Attracting"
    INDIFFERENT = "Indifferent"
    REPELLING = "Repelling"


@dataclass(frozen=True)
class FixedPointCharacter:
    lam: ExactPadic
    lambda_norm: Radius
    character: Character

    def to_json(self) -> dict:
        return {"lambda": str(self.lam), "lambda_norm": str(self.lambda_norm),
                "character": self.character.value}


def derivative(params: MapParams, x: Fraction) -> Fraction:
    """f'(x) by the quotient rule on the cubic and quadratic."""
    a, b, c, d = params.coefficients()
    num = x**3 + a * x**2 + b * x + c
    den = x**2 + a * x + d
    dnum = 3 * x**2 + 2 * a * x + b
    dden = 2 * x + a
    return (dnum * den - num * dden) / den**2


def classify_norm(lam_norm: Radius) -> Character:
    if lam_norm < ONE:
        return Character.ATTRACTING
    if lam_norm == ONE:
        return Character.INDIFFERENT
    return Character.REPELLING


def multiplier(params: MapParams) -> FixedPointCharacter:
    lam = ExactPadic(params.p, derivative(params, params.x0.value))
    norm = lam.norm()
    return FixedPointCharacter(lam, norm, classify_norm(norm))
