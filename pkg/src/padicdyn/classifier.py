"""Norms governing the radius map and the case table they select.

With u = x + a/2 the map satisfies

    |f(x) - x0|_p = |x - x0|_p * |u^2 + A0|_p / |u^2 + B0|_p,
    A0 = b - a^2/4,   B0 = d - a^2/4,

because u^2 + A0 = x^2 + a x + b and u^2 + B0 = x^2 + a x + d.  The
quantities used by the case analysis are

    alpha = |A0|_p, beta = |B0|_p, delta = |x0 + a/2|_p,
    cap_a = |(x0 + a/2)^2 + A0|_p = |x0^2 + a x0 + b|_p,
    cap_b = |(x0 + a/2)^2 + B0|_p = |x0^2 + a x0 + d|_p.

The cancellation norms cap_a, cap_b are what the case conditions write as
"|delta^2 + alpha|_p" and "|delta^2 + beta|_p": a real delta^2 cannot be
added to a p-adic quantity, and these are the only readings under which the
multiplier satisfies |f'(x0)|_p = cap_a / cap_b.

``alpha_poly`` and ``beta_poly`` below are kept as literal transcriptions
of the stated rational functions alpha(x), beta(x).  They do *not* make
the identity above hold (see tests/test_classifier.py for a frozen
counterexample), so ``critical_data`` uses A0 and B0 instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .map32 import MapParams, SingularInput
from .padic import ExactPadic, norm_of
from .radius import ONE, Radius


def alpha_poly(params: MapParams, x: ExactPadic) -> ExactPadic:
    """Stated alpha(x) = (8x^4 + 16ax^3 + 6(a^2+d)x^2 + (6ad + a^3 - c)x + a^2 d + bd - ac) / (4(x^2 + ax + d))."""
    a, b, c, d = params.coefficients()
    t = x.value
    q = t * t + a * t + d
    if q == 0:
        raise SingularInput(f"x = {x} is a root of x^2 + a x + d")
    num = (8 * t**4 + 16 * a * t**3 + 6 * (a * a + d) * t**2
           + (6 * a * d + a**3 - c) * t + a * a * d + b * d - a * c)
    return ExactPadic(params.p, num / (4 * q))


def beta_poly(params: MapParams, x: ExactPadic) -> ExactPadic:
    """Stated beta(x) = 2x^2 + 2ax + d + a^2/4."""
    a, _, _, d = params.coefficients()
    t = x.value
    return ExactPadic(params.p, 2 * t * t + 2 * a * t + d + a * a / 4)


def alpha_constant(params: MapParams) -> ExactPadic:
    a, b, _, _ = params.coefficients()
    return ExactPadic(params.p, b - a * a / 4)


def beta_constant(params: MapParams) -> ExactPadic:
    a, _, _, d = params.coefficients()
    return ExactPadic(params.p, d - a * a / 4)


def formula_ff_rhs(params: MapParams, x: ExactPadic, alpha0: Fraction, beta0: Fraction) -> Radius:
    """|x - x0| * |u^2 + alpha0| / |u^2 + beta0| with u = (x - x0) + (x0 + a/2)."""
    p = params.p
    x0 = params.x0.value
    a = params.a.value
    u = (x.value - x0) + (x0 + a / 2)
    return norm_of(x.value - x0, p) * norm_of(u * u + alpha0, p) / norm_of(u * u + beta0, p)


class CaseTag(enum.Enum):
    PHI1 = "Phi1"
    PHI2 = "Phi2"
    PHI3 = "Phi3"
    PHI4 = "Phi4"
    PHI5 = "Phi5"
    SPHI1 = "SPhi1"
    SPHI2 = "SPhi2"
    SPHI3 = "SPhi3"
    PSI1 = "Psi1"
    PSI2 = "Psi2"
    PSI3 = "Psi3"
    UNCLASSIFIED = "Unclassified"


CONDITIONS = {
    CaseTag.PHI1: "δ<√α<√β",
    CaseTag.PHI2: "δ<√α=√β",
    CaseTag.PHI3: "δ=√α<√β",
    CaseTag.PHI4: "δ<√β<√α",
    CaseTag.PHI5: "δ=√β<√α",
    CaseTag.SPHI1: "√α<δ<√β",
    CaseTag.SPHI2: "√α<δ=√β",
    CaseTag.SPHI3: "√α≤√β<δ",
    CaseTag.PSI1: "√β<δ<√α",
    CaseTag.PSI2: "√β<δ=√α, |δ²+α|<δ²",
    CaseTag.PSI3: "√β<√α≤δ, |δ²+α|=δ²",
    CaseTag.UNCLASSIFIED: "δ=√α=√β",
}


class UnclassifiedCase(ValueError):
    """δ = √α = √β: no radius map is defined for this configuration."""


@dataclass(frozen=True)
class CriticalData:
    """The norms (alpha, beta, delta, cap_a, cap_b) at the fixed point.

    ``two`` is |2|_p; it scales the cross term 2 u y of the expansion and is
    1 except for p = 2.
    """

    alpha: Radius
    beta: Radius
    delta: Radius
    cap_a: Radius
    cap_b: Radius
    two: Radius = ONE
    p: Optional[int] = None

    @property
    def sqrt_alpha(self) -> Radius:
        return self.alpha.sqrt()

    @property
    def sqrt_beta(self) -> Radius:
        return self.beta.sqrt()

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha), "beta": str(self.beta), "delta": str(self.delta),
            "capA": str(self.cap_a), "capB": str(self.cap_b),
            "sqrt_alpha": str(self.sqrt_alpha), "sqrt_beta": str(self.sqrt_beta),
        }


def critical_data(params: MapParams) -> CriticalData:
    p = params.p
    a, b, _, d = params.coefficients()
    x0 = params.x0.value
    e = x0 + a / 2
    alpha0 = b - a * a / 4
    beta0 = d - a * a / 4
    return CriticalData(
        alpha=norm_of(alpha0, p),
        beta=norm_of(beta0, p),
        delta=norm_of(e, p),
        cap_a=norm_of(e * e + alpha0, p),
        cap_b=norm_of(e * e + beta0, p),
        two=norm_of(2, p),
        p=p,
    )


def classify(data: CriticalData) -> CaseTag:
    d, sa, sb = data.delta, data.sqrt_alpha, data.sqrt_beta
    if d == sa == sb:
        return CaseTag.UNCLASSIFIED
    if d <= sa and d <= sb:
        if d < sa < sb:
            return CaseTag.PHI1
        if d < sa == sb:
            return CaseTag.PHI2
        if d == sa < sb:
            return CaseTag.PHI3
        if d < sb < sa:
            return CaseTag.PHI4
        return CaseTag.PHI5  # d == sb < sa
    if sa <= d and sa <= sb:
        if sa < d < sb:
            return CaseTag.SPHI1
        if sa < d == sb:
            return CaseTag.SPHI2
        return CaseTag.SPHI3  # sa <= sb < d
    # sb is the strict minimum from here on.
    if d < sa:
        return CaseTag.PSI1
    if d == sa and data.cap_a < d * d:
        return CaseTag.PSI2
    return CaseTag.PSI3


def sphi2_variant(data: CriticalData) -> str:
    """Sub-case of the SPhi2 configuration: C.a when |δ²+β| = δ², else C.b."""
    return "C.a" if data.cap_b == data.delta**2 else "C.b"


def variant_key(tag: CaseTag, data: CriticalData) -> str:
    if tag is CaseTag.SPHI2:
        return f"SPhi2/{sphi2_variant(data)}"
    return tag.value
