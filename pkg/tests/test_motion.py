from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ruledmotion.errors import (
    InvalidFactorError,
    NonGenericFactorizationError,
    PreconditionError,
    SingularParameterError,
)
from ruledmotion.motion import (
    LinearFactor,
    act_on_point,
    align_factor,
    dq_inverse,
    dq_mul,
    dq_right_divmod,
    extract_right_factor_quadratic,
    factor_into_linear,
    multiply_factors,
    pair_norm_roots,
    peel_translation_factor,
)
from ruledmotion.polynomial import Poly
from ruledmotion.quaternion import MotionPoly, QuatPoly, rgcd

from .goldens import (
    QUARTIC_MOTION,
    REVOLUTE_EXTENDED,
    REVOLUTE_FACTOR,
    REVOLUTE_LEAD,
    TRANSLATION_EXTENDED,
    TRANSLATION_FACTOR,
    one_plus_t2,
)
from .strategies import linear_factors, motion_polys, small_ints

t = Poly.t()
ONE = ((1, 0, 0, 0), (0, 0, 0, 0))


def rotation(axis: str) -> MotionPoly:
    return MotionPoly(QuatPoly(t) - QuatPoly.unit(axis), QuatPoly.zero())


def test_point_action_of_a_translation():
    C = MotionPoly(QuatPoly(1), QuatPoly(0, Fraction(1, 2), 0, 0))
    assert act_on_point(C, (0, 0, 0), 0) == (-1, 0, 0)
    assert act_on_point(C, (1, 2, 3), 5) == (0, 2, 3)


def test_point_action_of_a_rotation():
    C = rotation("k")
    # at t = 0 the displacement is the half turn about the z axis
    assert act_on_point(C, (1, 0, 0), 0) == (-1, 0, 0)
    assert act_on_point(C, (0, 0, 4), 3) == (0, 0, 4)


def test_point_action_singular_parameter():
    C = MotionPoly(QuatPoly(t), QuatPoly.zero())
    with pytest.raises(SingularParameterError):
        act_on_point(C, (1, 0, 0), 0)


def test_constant_inverse():
    a = ((1, 2, 0, 1), (0, 1, -1, 3))
    a = tuple(tuple(Fraction(c) for c in part) for part in a)
    assert dq_mul(a, dq_inverse(a)) == ((1, 0, 0, 0), (0, 0, 0, 0))


def test_right_division():
    A = QUARTIC_MOTION
    B = rotation("i")
    Q, R = dq_right_divmod(A, B)
    assert Q * B + R == A
    assert R.degree < B.degree


def test_extract_pure_rotations():
    C = rotation("k") * rotation("i")
    rest, fac = extract_right_factor_quadratic(C, one_plus_t2)
    assert fac == LinearFactor((0, 1, 0, 0), (0, 0, 0, 0))
    assert rest == rotation("k")
    with pytest.raises(NonGenericFactorizationError):
        extract_right_factor_quadratic(MotionPoly(QuatPoly(one_plus_t2), QuatPoly.zero()), one_plus_t2)


def test_extract_single_factor():
    rest, fac = extract_right_factor_quadratic(rotation("j"), one_plus_t2)
    assert fac.primal == (0, 0, 1, 0)
    assert rest.degree == 0


def test_extract_rejects_foreign_norm():
    with pytest.raises(InvalidFactorError):
        extract_right_factor_quadratic(rotation("k") * rotation("i"), t * t + 4)
    with pytest.raises(PreconditionError):
        extract_right_factor_quadratic(rotation("k"), t + 1)


def test_recover_revolute_factor():
    rest, fac = extract_right_factor_quadratic(REVOLUTE_EXTENDED, one_plus_t2)
    C, E = align_factor(rest, fac.poly(), REVOLUTE_LEAD)
    assert C == QUARTIC_MOTION
    assert E == REVOLUTE_FACTOR


def test_recover_translation_factor():
    rest, E = peel_translation_factor(TRANSLATION_EXTENDED, one_plus_t2, 1)
    assert rest == QUARTIC_MOTION
    assert E == TRANSLATION_FACTOR
    assert rest * E == TRANSLATION_EXTENDED


def test_peel_requires_divisibility():
    with pytest.raises(PreconditionError):
        peel_translation_factor(QUARTIC_MOTION, t * t + 4, 1)


def test_axis_of_rotation_factor():
    axis = LinearFactor((0, 0, 0, 1), (0, 0, 0, 0)).axis()
    assert axis.direction == (0, 0, 2) and axis.moment == (0, 0, 0)


def test_exact_factorization_needs_order():
    with pytest.raises(PreconditionError):
        factor_into_linear(rotation("k") * rotation("i"))


def test_float_factorization():
    C = (rotation("k") * MotionPoly(QuatPoly(t - 2, 1, 0, 0), QuatPoly(0, 0, 0, 3))).to_float()
    lead, factors = factor_into_linear(C)
    assert len(factors) == 2
    assert multiply_factors(lead, factors, False).is_close(C, 1e-9)


def test_pair_norm_roots_order_and_real_roots():
    n = (one_plus_t2 * ((t - 3) ** 2 + 1)).to_float()
    qs = pair_norm_roots(n)
    assert [round(c, 9) for c in qs[0].coeffs] == [10.0, -6.0, 1.0]
    with pytest.raises(NonGenericFactorizationError):
        pair_norm_roots((t * t - 1).to_float())


@st.composite
def factor_pairs(draw):
    return draw(linear_factors()), draw(linear_factors())


@given(factor_pairs())
@settings(max_examples=60, deadline=None)
def test_construct_then_factor(pair):
    f1, f2 = (LinearFactor(*f) for f in pair)
    n1, n2 = f1.norm(), f2.norm()
    assume(n1 != n2)
    C = multiply_factors(ONE, [f1, f2], True)
    assume(rgcd(C.primal).degree == 0)
    lead, factors = factor_into_linear(C, [n1, n2])
    assert factors == [f1, f2]
    assert multiply_factors(lead, factors, True) == C


@given(motion_polys(2), st.integers(1, 2), small_ints, small_ints)
@settings(max_examples=40, deadline=None)
def test_construct_then_peel(C, m, e0, e1):
    f = t * t + 2 * t + 5
    assume(rgcd(C.primal).degree == 0)
    fm = f**m
    E = MotionPoly(QuatPoly(fm), QuatPoly(0, 0, 0, Poly([e0, e1])))
    rest, E2 = peel_translation_factor(C * E, f, m)
    assert rest * E2 == C * E
    assert E2 == E and rest == C
