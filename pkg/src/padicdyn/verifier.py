"""Sampling harness: run p-adic orbits and check them against the radius maps.

Points are sampled on spheres of Q_p, so only integral radius exponents
are usable.  Short orbits are computed exactly; long ones (invariance over
ten steps, convergence, landing) use the fixed-precision offset orbit,
whose radii are certified as long as it does not report precision loss.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from . import map32
from .classifier import (
    CaseTag,
    CriticalData,
    UnclassifiedCase,
    alpha_constant,
    alpha_poly,
    beta_constant,
    beta_poly,
    classify,
    critical_data,
    formula_ff_rhs,
    sphi2_variant,
    variant_key,
)
from .fixed import fixed_from_exact
from .map32 import MapParams, SingularInput, Stop
from .padic import ExactPadic
from .radius import ZERO, Radius
from .radius_dynamics import (
    Complement,
    Deterministic,
    RadiusSet,
    RayAbove,
    attraction_radius,
    fixed_radii,
    landing_set,
    stylized_map,
    ultrametric_step,
)

DEFAULT_PRECISION = 48
DEFAULT_BUDGET = 64
DEFAULT_K = 10


class VacuousSphere(ValueError):
    """The requested radius is not in the value group p^Z of Q_p."""


def _rng(seed, *keys) -> random.Random:
    return random.Random(":".join(str(k) for k in (seed,) + keys))


@dataclass(frozen=True)
class SphereSpec:
    center: ExactPadic
    radius: Radius
    sample_count: int
    seed: object = 0

    def __post_init__(self):
        if not self.radius.is_integral:
            raise VacuousSphere(f"S_{self.radius} contains no point of Q_p")
        if self.sample_count < 1:
            raise ValueError("sample_count must be positive")


def random_unit(rng: random.Random, p: int, num_digits: int = 6, den_digits: int = 3) -> Fraction:
    """A rational p-adic unit whose base-p digits are drawn uniformly."""

    def draw(k):
        n = rng.randrange(1, p)
        for i in range(1, k):
            n += rng.randrange(p) * p**i
        return n

    sign = -1 if rng.random() < 0.5 else 1
    return Fraction(sign * draw(num_digits), draw(den_digits))


def sample_sphere(spec: SphereSpec) -> List[ExactPadic]:
    """Points x0 + p^m u with u a random unit, so |x - x0|_p = p^{-m} exactly."""
    c = spec.center
    if spec.radius.is_zero:
        return [c] * spec.sample_count
    m = -int(spec.radius.exp)
    rng = _rng(spec.seed, "sphere", c.p, c, spec.radius)
    scale = Fraction(c.p) ** m
    return [c + scale * random_unit(rng, c.p) for _ in range(spec.sample_count)]


# -- reports -------------------------------------------------------------------

PASS, FAIL, IN_P, INCONCLUSIVE, OUT = "pass", "fail", "in-P", "inconclusive", "out-of-clause"


def _exp(r: Optional[Radius]):
    if r is None:
        return None
    return "-inf" if r.is_zero else str(r.exp)


def _prediction(step) -> str:
    if step.is_deterministic:
        return _exp(step.r)
    lo = "" if step.lower is None else _exp(step.lower)
    hi = "" if step.upper is None else _exp(step.upper)
    return f"[{lo},{hi}]"


@dataclass
class SampleVerdict:
    index: int
    point: ExactPadic
    verdict: str
    observed: List[Radius] = field(default_factory=list)
    predicted: List[Optional[str]] = field(default_factory=list)
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "point": str(self.point),
            "verdict": self.verdict,
            "radius_exps": [_exp(r) for r in self.observed],
            "predicted_exps": self.predicted,
            "detail": self.detail,
        }


@dataclass
class CheckReport:
    claim: str
    case: str
    params: MapParams
    seed: object
    steps: int
    radius: Optional[Radius] = None
    samples: List[SampleVerdict] = field(default_factory=list)
    gating: bool = True
    vacuous: bool = False
    notes: List[str] = field(default_factory=list)

    def count(self, verdict: str) -> int:
        return sum(1 for s in self.samples if s.verdict == verdict)

    @property
    def status(self) -> str:
        if self.vacuous:
            return "vacuous"
        if self.count(FAIL):
            return "fail"
        if not self.count(PASS):
            return "inconclusive" if self.samples else "not-applicable"
        return "pass"

    @property
    def failed(self) -> bool:
        return self.gating and self.status == "fail"

    @property
    def counterexample(self) -> Optional[dict]:
        for s in self.samples:
            if s.verdict == FAIL:
                return {"params": self.params.to_json(), "point": str(s.point),
                        "n": self.steps, "radius_exps": [_exp(r) for r in s.observed],
                        "detail": s.detail}
        return None

    def to_json(self) -> dict:
        counts = {v: self.count(v) for v in (PASS, FAIL, IN_P, INCONCLUSIVE, OUT)}
        return {
            "claim": self.claim,
            "case_tag": self.case,
            "params": self.params.to_json(),
            "seed": self.seed,
            "steps": self.steps,
            "radius": None if self.radius is None else str(self.radius),
            "status": self.status,
            "gating": self.gating,
            "vacuous": self.vacuous,
            "counts": counts,
            "notes": self.notes,
            "counterexample": self.counterexample,
            "samples": [s.to_json() for s in self.samples],
        }

    def csv_rows(self) -> Iterable[list]:
        for s in self.samples:
            for n, r in enumerate(s.observed):
                pred = s.predicted[n] if n < len(s.predicted) else None
                yield [self.claim, s.index, n, _exp(r), pred, s.verdict]


def _case(params: MapParams):
    data = critical_data(params)
    return data, classify(data)


def _offset_radii(params: MapParams, x: ExactPadic, n: int, precision: int, until=None):
    """Radii of the fixed-precision orbit of ``x``; returns (radii, lost_precision)."""
    y = fixed_from_exact(x - params.x0, precision)
    rec = map32.offset_orbit_fixed(params, y, n, precision, stop_when=until)
    return rec.radii, rec.stop is Stop.PRECISION_LOSS


# -- checks --------------------------------------------------------------------


def check_formula_ff(params: MapParams, samples: Sequence[ExactPadic], seed=None,
                     stated: bool = False) -> CheckReport:
    """Compare |f(x) - x0| with the factored right-hand side, exactly.

    With ``stated=True`` the constants are the stated rational functions
    alpha(x0), beta(x0) instead of b - a²/4, d - a²/4; that report is
    informational (non-gating).
    """
    data, tag = _case(params)
    rep = CheckReport("ff-as-stated" if stated else "ff", variant_key(tag, data),
                      params, seed, 1, gating=not stated)
    if stated:
        alpha0, beta0 = alpha_poly(params, params.x0).value, beta_poly(params, params.x0).value
    else:
        alpha0, beta0 = alpha_constant(params).value, beta_constant(params).value
    x0 = params.x0
    for i, x in enumerate(samples):
        try:
            fx = map32.eval_f(params, x)
        except SingularInput:
            rep.samples.append(SampleVerdict(i, x, IN_P, detail="x is singular"))
            continue
        direct = (fx - x0).norm()
        rhs = formula_ff_rhs(params, x, alpha0, beta0)
        ok = direct == rhs
        rep.samples.append(SampleVerdict(i, x, PASS if ok else FAIL, [(x - x0).norm(), direct],
                                         [None, _exp(rhs)],
                                         "" if ok else f"direct {direct} vs rhs {rhs}"))
    return rep


def check_lemma_lf(params: MapParams, r: Radius, n: int, samples: Sequence[ExactPadic],
                   seed=None, bit_budget: int = map32.DEFAULT_BIT_BUDGET) -> CheckReport:
    """Exact orbits against the radius map, step by step.

    Deterministic steps must match exactly (both the ultrametric rule and,
    for odd p, the case's piecewise map).  At a point-dependent step the
    observed radius must respect the ultrametric bounds; the case's stated
    bound is also tested and violations are listed in the notes.  The
    comparison then resumes from the observed radius.
    """
    data, tag = _case(params)
    if tag is CaseTag.UNCLASSIFIED:
        raise UnclassifiedCase("δ = √α = √β has no radius map")
    if not r.is_integral:
        raise VacuousSphere(f"S_{r} contains no point of Q_p")
    use_stylized = params.p != 2
    rep = CheckReport("lemma-lf", variant_key(tag, data), params, seed, n, r)
    if not use_stylized:
        rep.notes.append("p = 2: piecewise maps assume |2|_p = 1; compared with the ultrametric rule only")
    stated_violations = 0
    for i, x in enumerate(samples):
        rec = map32.orbit(params, x, n, bit_budget)
        sv = SampleVerdict(i, x, PASS, list(rec.radii), [None])
        if rec.stop is Stop.HIT_SINGULARITY:
            sv.verdict, sv.detail = IN_P, f"orbit hits a singular point at step {rec.stop_step}"
        for k in range(len(rec.radii) - 1):
            cur, nxt = rec.radii[k], rec.radii[k + 1]
            gen = ultrametric_step(cur, data)
            sv.predicted.append(_prediction(gen))
            if gen.is_deterministic:
                if nxt != gen.r:
                    sv.verdict, sv.detail = FAIL, f"step {k}: observed {nxt}, expected {gen.r}"
                    break
                if use_stylized:
                    sty = stylized_map(tag, data, cur)
                    if not (sty.is_deterministic and sty.r == nxt):
                        sv.verdict = FAIL
                        sv.detail = f"step {k}: piecewise map gives {_prediction(sty)}, observed {nxt}"
                        break
            else:
                if not gen.admits(nxt):
                    sv.verdict, sv.detail = FAIL, f"step {k}: {nxt} outside ultrametric bounds"
                    break
                if use_stylized:
                    sty = stylized_map(tag, data, cur)
                    if not sty.admits(nxt):
                        stated_violations += 1
                        rep.notes.append(f"sample {i} step {k}: observed {nxt} violates stated "
                                         f"bound {sty.note} {_prediction(sty)}")
        if rec.stop is Stop.BUDGET_EXCEEDED and sv.verdict == PASS:
            sv.verdict, sv.detail = INCONCLUSIVE, "bit budget exceeded"
        rep.samples.append(sv)
    if stated_violations:
        rep.notes.insert(0, f"{stated_violations} observation(s) outside a stated critical bound")
    return rep


def check_invariant_spheres(params: MapParams, r: Radius, samples: Sequence[ExactPadic],
                            n: int = 10, seed=None, claim: str = "invariant",
                            gating: bool = True, precision: int = DEFAULT_PRECISION) -> CheckReport:
    """Every orbit point stays on S_r(x0) for ``n`` steps."""
    data, tag = _case(params)
    rep = CheckReport(claim, variant_key(tag, data), params, seed, n, r, gating=gating)
    for i, x in enumerate(samples):
        radii, lost = _offset_radii(params, x, n, precision)
        bad = next((k for k, s in enumerate(radii) if s != r), None)
        if bad is not None:
            sv = SampleVerdict(i, x, FAIL, radii, detail=f"left S_{r} at step {bad}: {radii[bad]}")
        elif lost:
            sv = SampleVerdict(i, x, INCONCLUSIVE, radii, detail="precision loss")
        else:
            sv = SampleVerdict(i, x, PASS, radii)
        sv.predicted = [_exp(r)] * len(radii)
        rep.samples.append(sv)
    return rep


def check_attraction(params: MapParams, samples: Sequence[ExactPadic], seed=None,
                     k_threshold: int = DEFAULT_K, budget: int = DEFAULT_BUDGET,
                     precision: int = DEFAULT_PRECISION, claim: str = "attraction") -> CheckReport:
    """Inside the attraction radius, radii decrease to p^{-K} at the predicted rate."""
    data, tag = _case(params)
    rep = CheckReport(claim, variant_key(tag, data), params, seed, budget)
    if tag is CaseTag.UNCLASSIFIED:
        rep.vacuous = True
        return rep
    inner = attraction_radius(tag, data)
    if inner is None:
        rep.notes.append(f"{tag.value} has no convergence clause")
        return rep
    rep.radius = inner
    threshold = Radius(Fraction(-k_threshold))
    x0 = params.x0
    factors = set()
    for i, x in enumerate(samples):
        r0 = (x - x0).norm()
        if r0.is_zero:
            rep.samples.append(SampleVerdict(i, x, PASS, [r0], detail="x = x0"))
            continue
        if not r0 < inner:
            rep.samples.append(SampleVerdict(i, x, OUT, [r0], detail=f"r = {r0} is not below {inner}"))
            continue
        radii, lost = _offset_radii(params, x, budget, precision, until=lambda s: s <= threshold)
        sv = SampleVerdict(i, x, PASS, radii, [None])
        for k in range(len(radii) - 1):
            cur, nxt = radii[k], radii[k + 1]
            gen = ultrametric_step(cur, data)
            sv.predicted.append(_prediction(gen))
            if nxt > cur:
                sv.verdict, sv.detail = FAIL, f"radius increased at step {k}"
                break
            if gen.is_deterministic and nxt != gen.r:
                sv.verdict, sv.detail = FAIL, f"step {k}: factor {nxt / cur} vs predicted {gen.r / cur}"
                break
            if not gen.is_deterministic and not gen.admits(nxt):
                sv.verdict, sv.detail = FAIL, f"step {k}: {nxt} outside ultrametric bounds"
                break
            if params.p != 2:
                sty = stylized_map(tag, data, cur)
                if sty.is_deterministic and sty.r != nxt:
                    sv.verdict, sv.detail = FAIL, f"step {k}: piecewise slope disagrees"
                    break
            if gen.is_deterministic and not nxt.is_zero:
                factors.add(str(nxt / cur))
        if sv.verdict == PASS and not radii[-1] <= threshold:
            sv.verdict = INCONCLUSIVE if lost else FAIL
            sv.detail = "precision loss" if lost else f"not below {threshold} within {budget} steps"
        rep.samples.append(sv)
    rep.notes.append("observed contraction factors: " + ", ".join(sorted(factors)))
    return rep


def check_landing_sets(params: MapParams, r: Radius, n: int, samples: Sequence[ExactPadic],
                       seed=None, precision: int = DEFAULT_PRECISION,
                       claim: str = "landing") -> CheckReport:
    """Inner orbits leave the critical ball into the landing set and stay put."""
    data, tag = _case(params)
    rep = CheckReport(claim, variant_key(tag, data), params, seed, n, r)
    land = landing_set(tag, data) if tag is not CaseTag.UNCLASSIFIED else None
    if land is None:
        rep.notes.append(f"{variant_key(tag, data)} has no landing clause")
        return rep
    rep.notes.append(f"landing set {land.name}: {land.to_json()}")
    x0 = params.x0
    for i, x in enumerate(samples):
        radii, lost = _offset_radii(params, x, n, precision)
        sv = SampleVerdict(i, x, PASS, radii, [None] + [_prediction(ultrametric_step(s, data))
                                                        for s in radii[:-1]])
        r0 = radii[0]
        if r0.is_zero:
            sv.verdict, sv.detail = OUT, "x = x0"
            rep.samples.append(sv)
            continue
        for k in range(len(radii) - 1):
            gen = ultrametric_step(radii[k], data)
            if not gen.admits(radii[k + 1]):
                sv.verdict, sv.detail = FAIL, f"step {k}: {radii[k + 1]} contradicts {_prediction(gen)}"
                break
        if sv.verdict == FAIL:
            rep.samples.append(sv)
            continue
        j = next((k for k, s in enumerate(radii) if s > land.critical), None)
        if j is None:
            sv.verdict = INCONCLUSIVE
            sv.detail = "precision loss" if lost else f"did not leave the critical ball in {n} steps"
        elif j == 0:
            if any(s != r0 for s in radii):
                sv.verdict, sv.detail = FAIL, "outside sphere not invariant"
            else:
                sv.detail = "already outside: invariant sphere"
        else:
            landed = radii[j]
            via_pd = not ultrametric_step(radii[j - 1], data).is_deterministic
            if not land.admits(landed, radii[j - 1], via_pd):
                sv.verdict = FAIL
                sv.detail = f"first outside radius {landed} (from {radii[j - 1]}) not in {land.name}"
            elif any(s != landed for s in radii[j:]):
                sv.verdict, sv.detail = FAIL, f"radius moved after landing at step {j}"
            else:
                sv.detail = f"landed at {landed} on step {j}"
            if lost and sv.verdict == PASS:
                sv.detail += " (precision loss afterwards)"
        rep.samples.append(sv)
    return rep


def small_sphere_exponent(data: CriticalData) -> int:
    """An integral exponent so deep that the radius map is r -> r cap_a/cap_b."""
    bounds = [data.cap_b.exp / 2]
    cross = data.two * data.delta
    if not cross.is_zero:
        bounds.append(data.cap_b.exp - cross.exp)
    if not data.cap_a.is_zero:
        bounds.append(data.cap_a.exp / 2)
        if not cross.is_zero:
            bounds.append(data.cap_a.exp - cross.exp)
    return math.floor(min(bounds)) - 1


def check_character(params: MapParams, samples: int = 10, seed=None, steps: int = 5,
                    precision: int = DEFAULT_PRECISION) -> CheckReport:
    """Drift on a small sphere agrees with |f'(x0)|: shrink, hold or grow."""
    data, tag = _case(params)
    char = map32.multiplier(params)
    e = small_sphere_exponent(data)
    r = Radius(e)
    rep = CheckReport("character", variant_key(tag, data), params, seed, steps, r)
    rep.notes.append(f"|λ| = {char.lambda_norm}: {char.character.value}")
    expected = char.character
    limit = r
    pts = sample_sphere(SphereSpec(params.x0, r, samples, seed))
    for i, x in enumerate(pts):
        radii, lost = _offset_radii(params, x, steps, precision)
        sv = SampleVerdict(i, x, PASS, radii)
        for k in range(len(radii) - 1):
            cur, nxt = radii[k], radii[k + 1]
            if cur > limit:
                break
            if nxt < cur:
                seen = map32.Character.ATTRACTING
            elif nxt == cur:
                seen = map32.Character.INDIFFERENT
            else:
                seen = map32.Character.REPELLING
            if seen is not expected:
                sv.verdict, sv.detail = FAIL, f"step {k}: drift {seen.value}, |λ| says {expected.value}"
                break
        if len(radii) < 2 and sv.verdict == PASS:
            sv.verdict, sv.detail = INCONCLUSIVE, "precision loss"
        rep.samples.append(sv)
    return rep


# -- theorem clauses -----------------------------------------------------------


@dataclass(frozen=True)
class Clause:
    claim: str
    kind: str
    radii: Optional[RadiusSet] = None
    gating: bool = True
    note: str = ""


def theorem_clauses(tag: CaseTag, data: CriticalData) -> List[Clause]:
    d, sa, sb = data.delta, data.sqrt_alpha, data.sqrt_beta
    if tag in (CaseTag.PHI1, CaseTag.PHI3):
        return [Clause("t1a.1+t1a.2/invariant", "invariant", RayAbove(sb)),
                Clause("t1a.2/attraction", "attraction")]
    if tag is CaseTag.PHI2:
        return [Clause("t1a.1+t1a.3/invariant", "invariant", Complement(sa))]
    if tag in (CaseTag.PHI4, CaseTag.PHI5):
        return [Clause("t1a.1/invariant", "invariant", RayAbove(sa)),
                Clause("t1a.4/landing", "landing"),
                Clause("t1a.4/invariant-as-stated", "invariant", Complement(sa), gating=False,
                       note="stated for all r ≠ √α; the radius map moves every r < √α")]
    if tag is CaseTag.SPHI1:
        return [Clause("tlp.A.1+tlp.B/invariant", "invariant", RayAbove(sb)),
                Clause("tlp.B/attraction", "attraction")]
    if tag is CaseTag.SPHI2:
        if sphi2_variant(data) == "C.a":
            return [Clause("tlp.A.3+tlp.C.a/invariant", "invariant", Complement(d))]
        return [Clause("tlp.A.4+tlp.C.b/invariant", "invariant", RayAbove(d)),
                Clause("tlp.C.b/landing", "landing")]
    if tag is CaseTag.SPHI3:
        return [Clause("tlp.A.2+tlp.D/invariant", "invariant", Complement(d))]
    if tag is CaseTag.PSI1:
        return [Clause("tlp1.i.1+tlp1.ii/invariant", "invariant", RayAbove(sa)),
                Clause("tlp1.ii/landing", "landing")]
    if tag is CaseTag.PSI2:
        return [Clause("tlp1.i.2+tlp1.iii/invariant", "invariant", RayAbove(d)),
                Clause("tlp1.iii/attraction", "attraction"),
                Clause("tlp1.i.3/invariant-as-stated", "invariant", Complement(d), gating=False,
                       note="stated with |δ²+β| = δ², which holds in every ψ case")]
    if tag is CaseTag.PSI3:
        return [Clause("tlp1.i.3+tlp1.iv/invariant", "invariant", Complement(d))]
    return []


def _floor_exp(r: Radius) -> int:
    return math.floor(r.exp)


def invariant_exponents(rs: RadiusSet, count: int = 3) -> List[int]:
    """Integral radius exponents inside an invariance range."""
    if isinstance(rs, RayAbove):
        if rs.r.is_zero:
            return list(range(-1, count - 1))
        start = _floor_exp(rs.r) + 1 if rs.strict or rs.r.exp.denominator != 1 else int(rs.r.exp)
        return [start + k for k in range(count)]
    if isinstance(rs, Complement):
        if rs.r.is_zero:
            return list(range(-1, count - 1))
        below = math.ceil(rs.r.exp) - 1
        above = _floor_exp(rs.r) + 1
        return [below - k for k in range(count - 1)] + [above]
    raise TypeError(rs)


def inner_exponents(bound: Radius, count: int = 3, inclusive: bool = False) -> List[int]:
    """Integral exponents below ``bound`` (at most ``bound`` if inclusive)."""
    top = _floor_exp(bound) if inclusive else math.ceil(bound.exp) - 1
    return [top - k for k in range(count)]


def landing_exponents(data: CriticalData, land, count: int = 3, depth: int = 12,
                      budget: int = DEFAULT_BUDGET) -> List[int]:
    """Inner spheres whose predicted radius path leaves the critical ball.

    The source sphere of a point-dependent exit comes first (that is the
    route where the bound matters), then spheres whose path is
    deterministic all the way out.  Spheres whose path stalls on a
    critical sphere are used only to fill up.
    """
    top = _floor_exp(land.critical)
    source, clean, stalled = [], [], []
    for e in range(top, top - depth, -1):
        r = Radius(e)
        if land.source is not None and r == land.source:
            source.append(e)
            continue
        for _ in range(budget):
            if r > land.critical:
                clean.append(e)
                break
            step = ultrametric_step(r, data)
            if not step.is_deterministic or step.r == r:
                stalled.append(e)
                break
            r = step.r
        else:
            stalled.append(e)
    return (source + clean + stalled)[:count]


def breakpoints(data: CriticalData) -> List[Radius]:
    pts = [data.delta, data.sqrt_alpha, data.sqrt_beta]
    if not data.delta.is_zero:
        pts += [data.cap_a / data.delta, data.cap_b / data.delta]
    return sorted({q for q in pts if not q.is_zero})


def noncritical_exponents(tag: CaseTag, data: CriticalData, count: int = 3) -> List[int]:
    """Integral exponents where both radius maps are deterministic, spread out."""
    bps = breakpoints(data)
    lo = _floor_exp(bps[0]) - 2 if bps else -2
    hi = math.ceil(bps[-1].exp) + 2 if bps else 2
    ok = []
    for e in range(lo, hi + 1):
        r = Radius(e)
        if ultrametric_step(r, data).is_deterministic and stylized_map(tag, data, r).is_deterministic:
            ok.append(e)
    if len(ok) <= count:
        return ok
    picks = [ok[0], ok[-1]]
    mid = sorted(ok[1:-1], key=lambda e: (abs(2 * e - (lo + hi)), e))
    picks += mid[: count - 2]
    return sorted(picks)


# -- Siegel disks --------------------------------------------------------------


def siegel_report(params: MapParams, seed=0, samples: int = 8, steps: int = 10,
                  precision: int = DEFAULT_PRECISION) -> dict:
    data, tag = _case(params)
    if tag is CaseTag.UNCLASSIFIED:
        raise UnclassifiedCase("δ = √α = √β has no radius map")
    degenerate = [name for name, r in (("alpha", data.alpha), ("beta", data.beta),
                                       ("delta", data.delta), ("capA", data.cap_a))
                  if r.is_zero]
    fix = fixed_radii(tag, data)
    hole = next((s for s in fix.parts if isinstance(s, Complement)), None)
    out = {"case_tag": variant_key(tag, data), "degenerate": degenerate,
           "character": map32.multiplier(params).character.value}
    if hole is None:
        out.update(siegel_disk=False, radius=None,
                   reason="small spheres are not invariant (|λ| ≠ 1)", confirmation=[])
        return out
    confirm = []
    if hole.r.is_zero:
        out.update(siegel_disk=True, radius=None, ball="whole field")
        exps = [-1, -2, -3]
    else:
        out.update(siegel_disk=True, radius=str(hole.r), ball=f"V_{hole.r}(x0)")
        exps = inner_exponents(hole.r)
    for e in exps:
        r = Radius(e)
        pts = sample_sphere(SphereSpec(params.x0, r, samples, seed))
        rep = check_invariant_spheres(params, r, pts, steps, seed, "siegel-interior",
                                      precision=precision)
        confirm.append({"radius": str(r), "status": rep.status, "passed": rep.count(PASS),
                        "samples": samples})
    out["confirmation"] = confirm
    return out


# -- suites --------------------------------------------------------------------

SUITES = ("ff", "lemma-lf", "spheres", "attraction", "landing", "all")


@dataclass
class SuiteConfig:
    seed: object = 0
    samples: int = 20
    n: Optional[int] = None
    k_threshold: int = DEFAULT_K
    budget: int = DEFAULT_BUDGET
    precision: int = DEFAULT_PRECISION
    r_exp: Optional[int] = None
    spheres: int = 3


def _points(params, e, cfg, *keys):
    return sample_sphere(SphereSpec(params.x0, Radius(e), cfg.samples, (cfg.seed,) + keys))


def _suite_ff(params, cfg: SuiteConfig) -> List[CheckReport]:
    rng = _rng(cfg.seed, "ff", params.p)
    pts = [params.x0 + Fraction(params.p) ** rng.randint(-4, 4) * random_unit(rng, params.p)
           for _ in range(cfg.samples)]
    return [check_formula_ff(params, pts, cfg.seed),
            check_formula_ff(params, pts, cfg.seed, stated=True)]


def _suite_lemma(params, tag, data, cfg) -> List[CheckReport]:
    exps = [cfg.r_exp] if cfg.r_exp is not None else noncritical_exponents(tag, data, cfg.spheres)
    n = cfg.n if cfg.n is not None else 6
    return [check_lemma_lf(params, Radius(e), n, _points(params, e, cfg, "lf"), cfg.seed)
            for e in exps]


def _suite_spheres(params, tag, data, cfg) -> List[CheckReport]:
    out = []
    n = cfg.n if cfg.n is not None else 10
    for cl in theorem_clauses(tag, data):
        if cl.kind != "invariant":
            continue
        exps = invariant_exponents(cl.radii, cfg.spheres)
        if cfg.r_exp is not None:
            exps = [cfg.r_exp] if cl.radii.contains(Radius(cfg.r_exp)) else []
        for e in exps:
            rep = check_invariant_spheres(params, Radius(e), _points(params, e, cfg, cl.claim),
                                          n, cfg.seed, cl.claim, cl.gating, cfg.precision)
            if cl.note:
                rep.notes.append(cl.note)
            out.append(rep)
    return out


def _suite_attraction(params, tag, data, cfg) -> List[CheckReport]:
    out = []
    for cl in theorem_clauses(tag, data):
        if cl.kind != "attraction":
            continue
        inner = attraction_radius(tag, data)
        exps = [cfg.r_exp] if cfg.r_exp is not None else inner_exponents(inner, cfg.spheres)
        for e in exps:
            rep = check_attraction(params, _points(params, e, cfg, cl.claim), cfg.seed,
                                   cfg.k_threshold, cfg.budget, cfg.precision, cl.claim)
            rep.radius = Radius(e)
            out.append(rep)
    return out


def _suite_landing(params, tag, data, cfg) -> List[CheckReport]:
    out = []
    n = cfg.n if cfg.n is not None else cfg.budget
    for cl in theorem_clauses(tag, data):
        if cl.kind != "landing":
            continue
        land = landing_set(tag, data)
        exps = ([cfg.r_exp] if cfg.r_exp is not None
                else landing_exponents(data, land, cfg.spheres, budget=cfg.budget))
        for e in exps:
            out.append(check_landing_sets(params, Radius(e), n, _points(params, e, cfg, cl.claim),
                                          cfg.seed, cfg.precision, cl.claim))
    return out


def run_suite(params: MapParams, suite: str, cfg: SuiteConfig) -> List[CheckReport]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    data, tag = _case(params)
    reports: List[CheckReport] = []
    if suite in ("ff", "all"):
        reports += _suite_ff(params, cfg)
    if tag is CaseTag.UNCLASSIFIED:
        if suite != "ff":
            rep = CheckReport(suite, tag.value, params, cfg.seed, 0, vacuous=True,
                              notes=["δ = √α = √β: no radius map to compare against"])
            reports.append(rep)
        return reports
    if suite in ("lemma-lf", "all"):
        reports += _suite_lemma(params, tag, data, cfg)
    if suite in ("spheres", "all"):
        reports += _suite_spheres(params, tag, data, cfg)
    if suite in ("attraction", "all"):
        reports += _suite_attraction(params, tag, data, cfg)
    if suite in ("landing", "all"):
        reports += _suite_landing(params, tag, data, cfg)
    return reports
