"""Hypothesis strategies for exact polynomial objects."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from ruledmotion.polynomial import Poly
from ruledmotion.quaternion import MotionPoly, QuatPoly

small_ints = st.integers(-5, 5)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def polys(max_degree: int = 3, coeffs=small_ints):
    return st.lists(coeffs, min_size=0, max_size=max_degree + 1).map(lambda cs: Poly(cs, exact=True))


def nonzero_polys(max_degree: int = 3, coeffs=small_ints):
    return polys(max_degree, coeffs).filter(lambda p: not p.is_zero)


def quat_polys(max_degree: int = 2, coeffs=small_ints):
    return st.tuples(*(polys(max_degree, coeffs) for _ in range(4))).map(lambda ps: QuatPoly(*ps, exact=True))


def nonzero_quat_polys(max_degree: int = 2, coeffs=small_ints):
    return quat_polys(max_degree, coeffs).filter(lambda q: not q.is_zero)


def const_quats(coeffs=small_ints):
    return st.tuples(coeffs, coeffs, coeffs, coeffs)


@st.composite
def linear_factors(draw, coeffs=small_ints):
    """``t - h`` with a rational dual quaternion ``h`` satisfying the Study
    condition and nonzero vector part."""
    w, x, y, z = draw(const_quats(coeffs))
    if not (x or y or z):
        x = 1
    # a vectorial dual part orthogonal to the primal vector part makes the
    # norm of t - h real
    a, b, c = draw(st.tuples(coeffs, coeffs, coeffs))
    dual = (0, y * c - z * b, z * a - x * c, x * b - y * a)
    return (Fraction(w), Fraction(x), Fraction(y), Fraction(z)), tuple(Fraction(c) for c in dual)


@st.composite
def motion_polys(draw, max_degree: int = 2):
    """Random motion polynomials as products of rational linear factors and a
    unit constant."""
    from ruledmotion.motion import LinearFactor

    n = draw(st.integers(1, max_degree))
    C = MotionPoly(QuatPoly(1))
    for _ in range(n):
        p, d = draw(linear_factors())
        C = C * MotionPoly.from_dual(LinearFactor(p, d).poly())
    return C
