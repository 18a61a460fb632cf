from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from ruledmotion.errors import ModeError, PreconditionError
from ruledmotion.polynomial import Poly
from ruledmotion.quaternion import (
    DualQuatPoly,
    MotionPoly,
    QuatPoly,
    dual_const_inverse,
    gcrd,
    left_divmod,
    quat_inverse,
    rgcd,
    right_divmod,
)

from .goldens import CONTENT, SATURATION_CONTENT, SATURATION_LINE, SEXTIC_LINE, pp
from .strategies import motion_polys, nonzero_quat_polys, quat_polys

t = Poly.t()
i, j, k = (QuatPoly.unit(n) for n in "ijk")


def test_hamilton_table():
    assert i * j == k
    assert j * k == i
    assert k * i == j
    assert j * i == -k
    assert i * i == QuatPoly(-1)


def test_sandwich_of_k():
    assert (QuatPoly(t) - k) * k * (QuatPoly(t) + k) == k * (t * t + 1)


def test_norm_is_real():
    P = QuatPoly(1, t)
    assert P.norm() == 1 + t * t
    assert (P * P.conj()).is_real


def test_rgcd_examples():
    assert rgcd(SATURATION_LINE.primal) == SATURATION_CONTENT
    assert rgcd(SEXTIC_LINE.primal) == CONTENT
    assert rgcd(QuatPoly(1, t)) == Poly([1])
    with pytest.raises(PreconditionError):
        rgcd(QuatPoly.zero())


def test_constant_inverse():
    q = (Fraction(1), Fraction(2), Fraction(-1), Fraction(3))
    inv = quat_inverse(q)
    assert QuatPoly(*q) * QuatPoly(*inv) == QuatPoly(1)
    a, b = dual_const_inverse((1, 0, 0, 1), (0, 1, 0, 0))
    prod = DualQuatPoly(QuatPoly(1, 0, 0, 1), QuatPoly(0, 1)) * DualQuatPoly(QuatPoly(*a), QuatPoly(*b))
    assert prod == DualQuatPoly(QuatPoly(1), QuatPoly.zero())


def test_mode_mixing_rejected():
    with pytest.raises(ModeError):
        QuatPoly(1) + QuatPoly(1.0, exact=False)


def test_motion_poly_requires_study_condition():
    with pytest.raises(PreconditionError):
        MotionPoly(QuatPoly(1), QuatPoly(1))
    MotionPoly(QuatPoly(1), QuatPoly(0, 1))


def test_gcrd_of_products():
    a = QuatPoly(t, 1, 2) * (QuatPoly(t) - k)
    b = QuatPoly(t * t + 3, 0, 1) * (QuatPoly(t) - k)
    assert gcrd(a, b) == QuatPoly(t) - k


@given(quat_polys(), quat_polys(), quat_polys())
@settings(max_examples=60)
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(quat_polys(), quat_polys())
def test_conjugation_reverses_products(a, b):
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * b).norm() == a.norm() * b.norm()


@given(quat_polys(3), nonzero_quat_polys(2))
def test_right_and_left_division(a, b):
    q, r = right_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    q, r = left_divmod(a, b)
    assert b * q + r == a
    assert r.degree < b.degree


@given(motion_polys())
@settings(max_examples=40)
def test_products_of_motions_satisfy_study(C):
    assert C.study_residual().is_zero
    assert C.norm() == C.primal.norm()


def test_text_parsing_of_goldens():
    assert pp("t^2-6t+10") == CONTENT
