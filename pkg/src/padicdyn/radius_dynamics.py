"""Real dynamical systems on radii.

For |x - x0| = r the image radius is r * |u^2 + A0| / |u^2 + B0| with
u = y + e, y = x - x0, e = x0 + a/2.  Expanding u^2 + A0 = y^2 + 2ey +
(e^2 + A0) gives three terms of norms r^2, |2| delta r and cap_a; the
ultrametric inequality pins the norm to the largest term when it is
unique.  ``ultrametric_step`` is that rule and is the reference.

``stylized_map`` transcribes the eleven piecewise maps (φ1..φ5, ϕ1..ϕ3,
ψ1..ψ3) branch by branch.  Two liberties are taken, both on the slope
branches written "λ r":

* φ3, φ5, ϕ2 and ψ2 give a single λ on r < δ, but the dominant term of the
  numerator (φ3, ψ2) or denominator (φ5, ϕ2) switches from the constant to
  the cross term at r = cap/δ.  The branch is split there and the slope is
  read off the data; at the switch point the result is point-dependent.
* Branches whose value the stated maps leave open (α*, β*, δ*, δ', β',
  α̂, δ̂) return ``PointDependent`` carrying the stated inequality.

The stylized maps assume |2|_p = 1 (odd p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .classifier import CaseTag, CriticalData, UnclassifiedCase, sphi2_variant
from .radius import ZERO, Radius


@dataclass(frozen=True)
class Deterministic:
    r: Radius

    @property
    def is_deterministic(self) -> bool:
        return True

    def admits(self, r: Radius) -> bool:
        return r == self.r

    def to_json(self) -> dict:
        return {"kind": "Deterministic", "r": str(self.r)}


@dataclass(frozen=True)
class PointDependent:
    """The image radius depends on the point; ``None`` bounds are open-ended."""

    upper: Optional[Radius] = None
    lower: Optional[Radius] = None
    note: str = ""

    @property
    def is_deterministic(self) -> bool:
        return False

    def admits(self, r: Radius) -> bool:
        if self.upper is not None and r > self.upper:
            return False
        if self.lower is not None and r < self.lower:
            return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": "PointDependent",
            "upper": None if self.upper is None else str(self.upper),
            "lower": None if self.lower is None else str(self.lower),
            "note": self.note,
        }


StepResult = Union[Deterministic, PointDependent]


def _dominant(terms: List[Radius]) -> Tuple[Radius, bool]:
    top = max(terms)
    return top, sum(1 for t in terms if t == top) == 1


def ultrametric_step(r: Radius, data: CriticalData) -> StepResult:
    """Image radius of the sphere S_r(x0) from the ultrametric expansion."""
    if r.is_zero:
        return Deterministic(ZERO)
    cross = data.two * data.delta * r
    num, num_exact = _dominant([r * r, cross, data.cap_a])
    den, den_exact = _dominant([r * r, cross, data.cap_b])
    if num_exact and den_exact:
        return Deterministic(r * num / den)
    upper = r * num / den if den_exact else None
    lower = r * num / den if num_exact else None
    return PointDependent(upper, lower, "ultrametric tie")


# -- the per-case piecewise maps ----------------------------------------------


def _slope_numerator(r, cap, d, den, stated_upper):
    """λ r with λ = max(cap, δ r)/den, split where the cross term takes over."""
    cross = d * r
    if cap > cross:
        return Deterministic(r * cap / den)
    if cap < cross:
        return Deterministic(r * cross / den)
    return PointDependent(upper=stated_upper, note="λ at the slope switch r = cap/δ")


def _slope_denominator(r, num, cap, d, stated_lower):
    """λ r with λ = num/max(cap, δ r), split where the cross term takes over."""
    cross = d * r
    if cap > cross:
        return Deterministic(r * num / cap)
    if cap < cross:
        return Deterministic(r * num / cross)
    return PointDependent(lower=stated_lower, note="λ at the slope switch r = cap/δ")


def stylized_map(tag: CaseTag, data: CriticalData, r: Radius) -> StepResult:
    A, B, d = data.alpha, data.beta, data.delta
    sa, sb = data.sqrt_alpha, data.sqrt_beta
    cA, cB = data.cap_a, data.cap_b
    if tag is CaseTag.UNCLASSIFIED:
        raise UnclassifiedCase("δ = √α = √β has no radius map")
    if r.is_zero:
        return Deterministic(ZERO)
    PD = PointDependent

    if tag is CaseTag.PHI1:
        if r < sa:
            return Deterministic(A / B * r)
        if r == sa:
            return PD(upper=A * sa / B, note="α* ≤ α√α/β")
        if r < sb:
            return Deterministic(r**3 / B)
        if r == sb:
            return PD(lower=sb, note="β* ≥ √β")
        return Deterministic(r)

    if tag is CaseTag.PHI2:
        if r != sa:
            return Deterministic(r)
        return PD(note="α̂")

    if tag is CaseTag.PHI3:
        if r < d:
            return _slope_numerator(r, cA, d, B, r * d * d / B)
        if r == d:
            return PD(upper=d**3 / B, note="δ* ≤ δ³/β")
        if r < sb:
            return Deterministic(r**3 / B)
        if r == sb:
            return PD(lower=sb, note="β* ≥ √β")
        return Deterministic(r)

    if tag is CaseTag.PHI4:
        if r < sb:
            return Deterministic(A / B * r)
        if r == sb:
            return PD(lower=A / sb, note="β* ≥ α/√β")
        if r < sa:
            return Deterministic(A / r)
        if r == sa:
            return PD(upper=sa, note="α* ≤ √α")
        return Deterministic(r)

    if tag is CaseTag.PHI5:
        if r < d:
            # Stated bound "λ ≥ δ²/β"; δ² = β here, so it reads λ ≥ 1.
            return _slope_denominator(r, A, cB, d, r * d * d / B)
        if r == d:
            return PD(lower=A / d, note="δ* ≥ α/δ")
        if r < sa:
            return Deterministic(A / r)
        if r == sa:
            return PD(upper=sa, note="α* ≤ √α")
        return Deterministic(r)

    if tag is CaseTag.SPHI1:
        if r < d:
            return Deterministic(d * d / B * r)
        if r == d:
            return PD(upper=d**3 / B, note="δ' ≤ δ³/β")
        if r < sb:
            return Deterministic(r**3 / B)
        if r == sb:
            return PD(lower=sb, note="β' ≥ √β")
        return Deterministic(r)

    if tag is CaseTag.SPHI2:
        if r < d:
            return _slope_denominator(r, d * d, cB, d, r)
        if r == d:
            return PD(upper=d, note="δ' ≤ δ")
        return Deterministic(r)

    if tag in (CaseTag.SPHI3, CaseTag.PSI3):
        if r != d:
            return Deterministic(r)
        return PD(note="δ̂")

    if tag is CaseTag.PSI1:
        if r < d:
            return Deterministic(A / (d * d) * r)
        if r == d:
            return PD(lower=A / d, note="δ* ≥ α/δ")
        if r < sa:
            return Deterministic(A / r)
        if r == sa:
            return PD(upper=sa, note="α* ≤ √α")
        return Deterministic(r)

    if tag is CaseTag.PSI2:
        if r < d:
            return _slope_numerator(r, cA, d, d * d, r * cA / (d * d))
        if r == d:
            return PD(lower=d, note="δ̂ ≥ δ")
        return Deterministic(r)

    raise AssertionError(tag)


def literal_slope_map(tag: CaseTag, data: CriticalData, r: Radius) -> Optional[StepResult]:
    """The slope branches with λ frozen at its stated constant, or ``None``.

    Only ψ2 (λ = |δ²+α|/δ²) and ϕ2 (λ = δ²/|δ²+β|) come with an explicit
    constant; ``stylized_map`` refines this reading by splitting the branch.
    """
    d = data.delta
    if r.is_zero or not r < d:
        return None
    if tag is CaseTag.PSI2:
        return Deterministic(r * data.cap_a / (d * d))
    if tag is CaseTag.SPHI2:
        return Deterministic(r * d * d / data.cap_b)
    return None


# -- radius sets ---------------------------------------------------------------


class RadiusSet:
    def contains(self, r: Radius) -> bool:
        """Membership, counting conditional points as members."""
        raise NotImplementedError

    def contains_certainly(self, r: Radius) -> bool:
        """Membership, excluding conditional points."""
        return self.contains(r)


@dataclass(frozen=True)
class Singleton(RadiusSet):
    r: Radius

    def contains(self, r):
        return r == self.r

    def to_json(self):
        return {"kind": "Singleton", "r": str(self.r)}


@dataclass(frozen=True)
class OpenInterval(RadiusSet):
    lo: Radius
    hi: Radius

    def contains(self, r):
        return self.lo < r < self.hi

    def to_json(self):
        return {"kind": "OpenInterval", "lo": str(self.lo), "hi": str(self.hi)}


@dataclass(frozen=True)
class RayAbove(RadiusSet):
    r: Radius
    strict: bool = True
    label: str = ""

    def contains(self, r):
        return r > self.r if self.strict else r >= self.r

    def to_json(self):
        out = {"kind": "RayAbove", "r": str(self.r), "strict": self.strict}
        if self.label:
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class Interval(RadiusSet):
    """Closed/unbounded interval built from point-dependent bounds."""

    lo: Optional[Radius]
    hi: Optional[Radius]

    def contains(self, r):
        return (self.lo is None or r >= self.lo) and (self.hi is None or r <= self.hi)

    def to_json(self):
        return {"kind": "Interval",
                "lo": None if self.lo is None else str(self.lo),
                "hi": None if self.hi is None else str(self.hi)}


@dataclass(frozen=True)
class Complement(RadiusSet):
    r: Radius

    def contains(self, r):
        return r != self.r

    def to_json(self):
        return {"kind": "Complement", "r": str(self.r)}


@dataclass(frozen=True)
class ConditionalPoint(RadiusSet):
    r: Radius
    condition: str

    def contains(self, r):
        return r == self.r

    def contains_certainly(self, r):
        return False

    def to_json(self):
        return {"kind": "ConditionalPoint", "r": str(self.r), "condition": self.condition}


@dataclass(frozen=True)
class UnionSet(RadiusSet):
    parts: Tuple[RadiusSet, ...]

    def contains(self, r):
        return any(s.contains(r) for s in self.parts)

    def contains_certainly(self, r):
        return any(s.contains_certainly(r) for s in self.parts)

    def to_json(self):
        return {"kind": "Union", "parts": [s.to_json() for s in self.parts]}


def _require(tag: CaseTag) -> None:
    if tag is CaseTag.UNCLASSIFIED:
        raise UnclassifiedCase("δ = √α = √β has no radius map")


def fixed_radii(tag: CaseTag, data: CriticalData) -> UnionSet:
    _require(tag)
    d, sa, sb = data.delta, data.sqrt_alpha, data.sqrt_beta
    zero = Singleton(ZERO)
    if tag in (CaseTag.PHI1, CaseTag.PHI3):
        return UnionSet((zero, RayAbove(sb), ConditionalPoint(sb, "β* = √β")))
    if tag is CaseTag.PHI2:
        return UnionSet((zero, Complement(sa), ConditionalPoint(sa, "α̂ = √α")))
    if tag in (CaseTag.PHI4, CaseTag.PHI5, CaseTag.PSI1):
        return UnionSet((zero, RayAbove(sa), ConditionalPoint(sa, "α* = √α")))
    if tag is CaseTag.SPHI1:
        return UnionSet((zero, RayAbove(sb), ConditionalPoint(sb, "β' = √β")))
    if tag is CaseTag.SPHI2:
        if sphi2_variant(data) == "C.a":
            return UnionSet((zero, Complement(d), ConditionalPoint(d, "δ' = δ")))
        return UnionSet((zero, RayAbove(d), ConditionalPoint(d, "δ' = δ")))
    if tag in (CaseTag.SPHI3, CaseTag.PSI3):
        return UnionSet((zero, Complement(d), ConditionalPoint(d, "δ̂ = δ")))
    if tag is CaseTag.PSI2:
        return UnionSet((zero, RayAbove(d), ConditionalPoint(d, "δ̂ = δ")))
    raise AssertionError(tag)


@dataclass(frozen=True)
class LandingSet:
    """Where inner orbits settle.

    An exit by a deterministic step must land in ``interval``.  An exit
    from a point-dependent sphere (``source``, or any other sphere where
    the caller knows cancellation is possible) only obeys the lower bound
    ``source_bound``.
    """

    name: str
    critical: Radius
    interval: OpenInterval
    source: Optional[Radius] = None
    source_bound: Optional[RayAbove] = None

    def as_set(self) -> UnionSet:
        parts = [self.interval]
        if self.source_bound is not None:
            parts.append(self.source_bound)
        return UnionSet(tuple(parts))

    def admits(self, landed: Radius, came_from: Radius,
               point_dependent: Optional[bool] = None) -> bool:
        if point_dependent is None:
            point_dependent = self.source is not None and came_from == self.source
        if point_dependent and self.source_bound is not None:
            return self.source_bound.contains(landed) or self.interval.contains(landed)
        return self.interval.contains(landed)

    def to_json(self):
        return {"name": self.name, "critical": str(self.critical),
                "interval": self.interval.to_json(),
                "source": None if self.source is None else str(self.source),
                "source_bound": None if self.source_bound is None else self.source_bound.to_json()}


def landing_set(tag: CaseTag, data: CriticalData) -> Optional[LandingSet]:
    """C4, C5, B or E for the cases with a landing clause, else ``None``."""
    A, d = data.alpha, data.delta
    sa, sb = data.sqrt_alpha, data.sqrt_beta
    if tag is CaseTag.PHI4:
        return LandingSet("C4", sa, OpenInterval(sa, A / sb), sb, RayAbove(A / sb, False, "β*"))
    if tag is CaseTag.PHI5:
        return LandingSet("C5", sa, OpenInterval(sa, A / d), d, RayAbove(A / d, False, "δ*"))
    if tag is CaseTag.PSI1:
        return LandingSet("E", sa, OpenInterval(sa, A / d), d, RayAbove(A / d, False, "δ*"))
    if tag is CaseTag.SPHI2 and sphi2_variant(data) == "C.b":
        return LandingSet("B", d, OpenInterval(d, d**3 / data.cap_b))
    return None


# -- limits --------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergesToZero:
    def to_json(self):
        return {"kind": "ConvergesToZero"}


@dataclass(frozen=True)
class StaysAt:
    r: Radius

    def to_json(self):
        return {"kind": "StaysAt", "r": str(self.r)}


@dataclass(frozen=True)
class LandsIn:
    set: LandingSet

    def to_json(self):
        return {"kind": "LandsIn", "set": self.set.to_json()}


@dataclass(frozen=True)
class PointDependentAfterCritical:
    set: Interval

    def to_json(self):
        return {"kind": "PointDependentAfterCritical", "set": self.set.to_json()}


LimitBehavior = Union[ConvergesToZero, StaysAt, LandsIn, PointDependentAfterCritical]

_ATTRACTING_BELOW_SQRT_BETA = (CaseTag.PHI1, CaseTag.PHI3, CaseTag.SPHI1)


def attraction_radius(tag: CaseTag, data: CriticalData) -> Optional[Radius]:
    """Open radius below which every sphere is attracted to x0, if any."""
    if tag in _ATTRACTING_BELOW_SQRT_BETA:
        return data.sqrt_beta
    if tag is CaseTag.PSI2:
        return data.delta
    return None


def limit_behavior(tag: CaseTag, data: CriticalData, r: Radius) -> LimitBehavior:
    _require(tag)
    if fixed_radii(tag, data).contains_certainly(r):
        return StaysAt(r)
    inner = attraction_radius(tag, data)
    if inner is not None and r < inner:
        return ConvergesToZero()
    landing = landing_set(tag, data)
    if landing is not None and r <= landing.critical:
        return LandsIn(landing)
    step = stylized_map(tag, data, r)
    if isinstance(step, PointDependent):
        return PointDependentAfterCritical(Interval(step.lower, step.upper))
    raise AssertionError(f"no limit clause for {tag.value} at r = {r}")


def radius_orbit(tag: CaseTag, data: CriticalData, r: Radius, n: int) -> List[StepResult]:
    """``[r, φ(r), φ²(r), ...]``, ending early at the first point-dependent step."""
    _require(tag)
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: List[StepResult] = [Deterministic(r)]
    for _ in range(n):
        step = stylized_map(tag, data, r)
        out.append(step)
        if not step.is_deterministic:
            break
        r = step.r
    return out
