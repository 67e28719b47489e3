from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from padicdyn.classifier import CaseTag, CriticalData, UnclassifiedCase, classify
from padicdyn.radius import ONE, ZERO, Radius, rmax
from padicdyn.radius_dynamics import (
    Complement,
    ConditionalPoint,
    ConvergesToZero,
    Deterministic,
    LandsIn,
    OpenInterval,
    PointDependent,
    PointDependentAfterCritical,
    RayAbove,
    StaysAt,
    fixed_radii,
    landing_set,
    limit_behavior,
    literal_slope_map,
    radius_orbit,
    stylized_map,
    ultrametric_step,
)

from grids import RADIUS_GRID, pattern_grid

R = Radius


def data(d, a, b, cap_a=None, cap_b=None, two=ONE):
    d, a, b = (ZERO if v is None else R(v) for v in (d, a, b))
    return CriticalData(a, b, d, rmax(d * d, a) if cap_a is None else cap_a,
                        rmax(d * d, b) if cap_b is None else cap_b, two)


PHI1 = data(-2, -2, 2)    # δ = p^-2 < √α = p^-1 < √β = p^1
PHI4 = data(-3, 4, 0)     # δ < √β = 1 < √α = p^2
PSI2 = data(0, 0, -2, cap_a=R(-3))


def test_ultrametric_examples():
    assert ultrametric_step(R(-3), PHI1) == Deterministic(R(-3) * PHI1.alpha / PHI1.beta)
    assert ultrametric_step(R(5), PHI1) == Deterministic(R(5))
    step = ultrametric_step(R(1), PHI1)
    assert isinstance(step, PointDependent) and step.lower == R(1) and step.upper is None
    assert ultrametric_step(ZERO, PHI1) == Deterministic(ZERO)


def test_stylized_examples():
    assert stylized_map(CaseTag.PHI4, PHI4, R(1)) == Deterministic(PHI4.alpha / R(1))
    phi2 = data(-1, 2, 2)
    assert classify(phi2) is CaseTag.PHI2
    assert stylized_map(CaseTag.PHI2, phi2, R(3)) == Deterministic(R(3))
    assert stylized_map(CaseTag.PHI2, phi2, R(-5)) == Deterministic(R(-5))
    assert isinstance(stylized_map(CaseTag.PHI2, phi2, R(1)), PointDependent)


def test_psi2_slope_branch_is_split():
    assert classify(PSI2) is CaseTag.PSI2
    # Below cap_a/δ = p^-3 the slope is cap_a/δ².
    assert stylized_map(CaseTag.PSI2, PSI2, R(-5)) == Deterministic(R(-5) * PSI2.cap_a)
    # Between cap_a/δ and δ the cross term wins: the image is r²/δ.
    assert stylized_map(CaseTag.PSI2, PSI2, R(-1)) == Deterministic(R(-2))
    assert stylized_map(CaseTag.PSI2, PSI2, R(-1)) == ultrametric_step(R(-1), PSI2)
    assert literal_slope_map(CaseTag.PSI2, PSI2, R(-1)) == Deterministic(R(-4))
    assert isinstance(stylized_map(CaseTag.PSI2, PSI2, R(-3)), PointDependent)


def test_sphi2_cb_slope_saturates_at_delta():
    cb = data(0, -2, 0, cap_b=R(-2))
    assert classify(cb) is CaseTag.SPHI2
    assert stylized_map(CaseTag.SPHI2, cb, R(-5)) == Deterministic(R(-3))
    assert stylized_map(CaseTag.SPHI2, cb, R(-1)) == Deterministic(ONE)
    assert literal_slope_map(CaseTag.SPHI2, cb, R(-1)) == Deterministic(R(1))


def test_unclassified_rejected():
    with pytest.raises(UnclassifiedCase):
        stylized_map(CaseTag.UNCLASSIFIED, data(0, 0, 0), ONE)
    with pytest.raises(UnclassifiedCase):
        fixed_radii(CaseTag.UNCLASSIFIED, data(0, 0, 0))


def test_fixed_radii_examples():
    fix = fixed_radii(CaseTag.PHI1, PHI1)
    assert fix.parts[1] == RayAbove(PHI1.sqrt_beta)
    assert isinstance(fix.parts[2], ConditionalPoint)
    phi2 = data(-1, 2, 2)
    assert fixed_radii(CaseTag.PHI2, phi2).parts[1] == Complement(R(1))
    sphi3 = data(2, 0, 1)
    assert fixed_radii(CaseTag.SPHI3, sphi3).parts[1] == Complement(R(2))
    assert fix.contains(ZERO) and fix.contains(R(4)) and not fix.contains(R(-4))


def test_limit_examples():
    assert limit_behavior(CaseTag.PHI1, PHI1, R(-4)) == ConvergesToZero()
    lands = limit_behavior(CaseTag.PHI4, PHI4, R(-6))
    assert isinstance(lands, LandsIn) and lands.set.name == "C4"
    assert lands.set.interval == OpenInterval(R(2), PHI4.alpha / PHI4.sqrt_beta)
    assert limit_behavior(CaseTag.PHI4, PHI4, R(7)) == StaysAt(R(7))


def test_limit_at_critical_sphere_outside_any_clause():
    phi2 = data(-1, 2, 2)
    out = limit_behavior(CaseTag.PHI2, phi2, R(1))
    assert isinstance(out, PointDependentAfterCritical)


def test_radius_orbit_examples():
    orb = radius_orbit(CaseTag.PHI1, PHI1, R(-3), 3)
    ratio = PHI1.alpha / PHI1.beta
    assert [s.r for s in orb] == [R(-3) * ratio**k for k in range(4)]
    assert [s.r for s in radius_orbit(CaseTag.PHI1, PHI1, R(6), 4)] == [R(6)] * 5
    crit = radius_orbit(CaseTag.PHI1, PHI1, PHI1.sqrt_beta, 5)
    assert len(crit) == 2 and not crit[-1].is_deterministic


def test_landing_sets_exist_only_for_landing_cases():
    assert landing_set(CaseTag.PHI1, PHI1) is None
    phi5 = data(-1, 4, -2)
    assert classify(phi5) is CaseTag.PHI5
    c5 = landing_set(CaseTag.PHI5, phi5)
    assert c5.name == "C5" and c5.interval == OpenInterval(R(2), R(5))
    assert not c5.admits(R(6), R(-3)) and c5.admits(R(6), R(-1))


GRID = [dt for dt in pattern_grid(-3, 3)]


@settings(max_examples=400, deadline=None)
@given(st.sampled_from(GRID), st.sampled_from(RADIUS_GRID))
def test_stylized_agrees_with_general_rule(dt, r):
    tag = classify(dt)
    if tag is CaseTag.UNCLASSIFIED:
        return
    sty = stylized_map(tag, dt, r)
    gen = ultrametric_step(r, dt)
    if sty.is_deterministic:
        assert gen == sty


# Stated critical-sphere bounds that the ultrametric rule does not imply.
UNSUPPORTED_BOUNDS = {("SPhi2", "δ' ≤ δ"), ("Psi2", "δ̂ ≥ δ")}


def _implied(sty, gen):
    if gen.is_deterministic:
        return sty.admits(gen.r)
    lo_ok = sty.lower is None or (gen.lower is not None and gen.lower >= sty.lower)
    hi_ok = sty.upper is None or (gen.upper is not None and gen.upper <= sty.upper)
    return lo_ok and hi_ok


def test_stated_bounds_follow_from_general_rule_except_two():
    unsupported = set()
    for dt in GRID:
        tag = classify(dt)
        if tag is CaseTag.UNCLASSIFIED:
            continue
        for r in RADIUS_GRID:
            sty = stylized_map(tag, dt, r)
            if not sty.is_deterministic and not _implied(sty, ultrametric_step(r, dt)):
                unsupported.add((tag.value, sty.note))
    assert unsupported == UNSUPPORTED_BOUNDS


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(GRID), st.sampled_from(RADIUS_GRID))
def test_fixed_set_soundness(dt, r):
    tag = classify(dt)
    if tag is CaseTag.UNCLASSIFIED:
        return
    if fixed_radii(tag, dt).contains_certainly(r):
        assert stylized_map(tag, dt, r) == Deterministic(r)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(GRID), st.sampled_from(RADIUS_GRID), st.sampled_from(RADIUS_GRID))
def test_phi_maps_monotone_on_deterministic_branches(dt, r1, r2):
    tag = classify(dt)
    if tag not in (CaseTag.PHI1, CaseTag.PHI2, CaseTag.PHI3) or not r1 < r2:
        return
    s1, s2 = stylized_map(tag, dt, r1), stylized_map(tag, dt, r2)
    if s1.is_deterministic and s2.is_deterministic:
        assert s1.r <= s2.r


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(GRID), st.sampled_from(RADIUS_GRID))
def test_limit_soundness(dt, r):
    tag = classify(dt)
    if tag is CaseTag.UNCLASSIFIED or r.is_zero:
        return
    lim = limit_behavior(tag, dt, r)
    orb = radius_orbit(tag, dt, r, 20)
    if isinstance(lim, StaysAt):
        assert all(s == Deterministic(r) for s in orb)
    if isinstance(lim, ConvergesToZero):
        rs = [s.r for s in orb if s.is_deterministic]
        assert all(b < a for a, b in zip(rs, rs[1:]))
