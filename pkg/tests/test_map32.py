from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from padicdyn import map32
from padicdyn.fixed import fixed_from_exact
from padicdyn.map32 import (
    Character,
    InvalidParams,
    MapParams,
    SingularInput,
    Stop,
    eval_f,
    fixed_point,
    multiplier,
    orbit,
    singular_points,
)
from padicdyn.padic import ExactPadic
from padicdyn.radius import ONE, ZERO, Radius

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def map_params(draw, primes=(2, 3, 5, 7)):
    p = draw(st.sampled_from(primes))
    a, b, c, d = (draw(small) for _ in range(4))
    assume(b != d)
    try:
        return MapParams.of(p, a, b, c, d)
    except InvalidParams:
        assume(False)


def test_fixed_point_examples():
    assert fixed_point(MapParams.of(2, 0, 0, 2, 1)).value == 2
    assert fixed_point(MapParams.of(3, 5, 1, 0, 7)).value == 0
    assert fixed_point(MapParams.of(5, 1, 1, 6, 3)).value == 3


def test_construction_invariants():
    with pytest.raises(InvalidParams, match="b ≠ d"):
        MapParams.of(3, 0, 1, 1, 1)
    # x0 = 1/(-1 - 0) = -1 is a root of x^2 - 1.
    with pytest.raises(InvalidParams, match="x0"):
        MapParams.of(3, 0, 0, 1, -1)
    with pytest.raises(ValueError):
        MapParams(ExactPadic(3, Fraction(0)), ExactPadic(3, Fraction(1)),
                  ExactPadic(5, Fraction(1)), ExactPadic(3, Fraction(2)))


def test_singular_point_examples():
    two = singular_points(MapParams.of(3, 0, 1, 5, -1))
    assert [r.value for r in two.roots] == [-1, 1] and not two.double
    double = singular_points(MapParams.of(3, 2, 0, 5, 1))
    assert [r.value for r in double.roots] == [-1] and double.double
    none = singular_points(MapParams.of(7, 0, 0, 5, 1))
    assert none.roots == () and not none.in_qp
    # x^2 - 2 has roots in Q_7 (3^2 = 2 mod 7) but not in Q.
    irr = singular_points(MapParams.of(7, 0, 0, 5, -2))
    assert irr.in_qp and not irr.rational


def test_eval_examples():
    params = MapParams.of(3, 0, 0, 0, 1)
    assert eval_f(params, ExactPadic(3, Fraction(1))).value == Fraction(1, 2)
    assert eval_f(params, params.x0) == params.x0
    with pytest.raises(SingularInput):
        eval_f(MapParams.of(3, 0, 1, 5, -1), ExactPadic(3, Fraction(1)))


def test_orbit_of_fixed_point_is_constant():
    params = MapParams.of(5, 1, 2, 3, 4)
    rec = orbit(params, params.x0, 5)
    assert rec.stop is Stop.COMPLETED
    assert all(pt == params.x0 for pt in rec.points) and rec.radii == [ZERO] * 6


def test_hit_singularity_steps():
    # With a=0, b=0, c=-5, d=-1: singular points ±1 and f(2) = (8 - 5)/3 = 1.
    params = MapParams.of(3, 0, 0, -5, -1)
    rec = orbit(params, ExactPadic(3, Fraction(2)), 4)
    assert rec.stop is Stop.HIT_SINGULARITY and rec.stop_step == 1 and rec.in_P
    assert rec.termination() == "HitSingularity(1)"
    rec0 = orbit(params, ExactPadic(3, Fraction(-1)), 4)
    assert rec0.termination() == "HitSingularity(0)"


def test_bit_budget():
    params = MapParams.of(3, 0, 1, 1, Fraction(1, 9))
    rec = orbit(params, ExactPadic(3, Fraction(1, 3)), 30, bit_budget=2000)
    assert rec.stop is Stop.BUDGET_EXCEEDED


def test_precision_loss_near_a_pole():
    params = MapParams.of(3, 0, 0, -5, -1)
    x = ExactPadic(3, Fraction(1 + 3**5))
    y = fixed_from_exact(x - params.x0, 2)
    rec = map32.offset_orbit_fixed(params, y, 3, 2)
    assert rec.stop is Stop.PRECISION_LOSS and rec.stop_step == 0


@settings(max_examples=60, deadline=None)
@given(map_params(), small, st.integers(0, 8))
def test_fixed_orbit_agrees_with_exact(params, x, n):
    x = ExactPadic(params.p, x)
    exact = orbit(params, x, n)
    assume(exact.stop is Stop.COMPLETED)
    fx = fixed_from_exact(x, 60) if not x.is_zero() else None
    assume(fx is not None)
    fixed = map32.orbit_fixed_precision(params, fx, n)
    assume(fixed.stop is Stop.COMPLETED)
    for e, f in zip(exact.points, fixed.points):
        if f is None:
            continue
        assert f.agrees_with(fixed_from_exact(e, f.precision)) if not e.is_zero() else f.is_exact_zero
    assert fixed.radii == exact.radii


@given(map_params(), small)
def test_fixed_point_is_unique(params, x):
    assume(x != params.x0.value)
    try:
        fx = eval_f(params, ExactPadic(params.p, x))
    except SingularInput:
        return
    assert fx.value != x


@given(map_params())
def test_multiplier_matches_factorization(params):
    # Independent oracle: f(x) - x0 = (x - x0) N(x)/Q(x) gives f'(x0) = N(x0)/Q(x0).
    a, b, _, d = params.coefficients()
    x0 = params.x0.value
    oracle = (x0 * x0 + a * x0 + b) / (x0 * x0 + a * x0 + d)
    ch = multiplier(params)
    assert ch.lam.value == oracle
    expected = (Character.ATTRACTING if ch.lambda_norm < ONE else
                Character.INDIFFERENT if ch.lambda_norm == ONE else Character.REPELLING)
    assert ch.character is expected


def test_reference_tuple_multiplier():
    ch = multiplier(MapParams.of(2, 0, 0, 2, 1))
    assert ch.lam.value == Fraction(4, 5)
    assert ch.lambda_norm == Radius(-2) and ch.character is Character.ATTRACTING
