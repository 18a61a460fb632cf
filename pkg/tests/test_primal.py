from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ruledmotion.errors import GenericityError, NotKinematicError, PreconditionError
from ruledmotion.lines import saturation_analysis, validate_line_poly
from ruledmotion.polynomial import Poly
from ruledmotion.primal import (
    IDENTITY,
    build_primal_part,
    k_action,
    minimal_saturating_primal,
    normalize_sign,
    rational_sqrt,
    rotate_problem,
    rotation_schedule,
    solve_primal,
    solve_primal_fixed,
    square_part,
)
from ruledmotion.quaternion import QuatPoly, rgcd

from .goldens import (
    CONTENT,
    CYLINDROID,
    CYLINDROID_SWAPPED,
    K_LINE,
    SATURATION_CONTENT,
    SATURATION_FACTOR,
    SATURATION_LINE,
    SATURATION_Q,
    SEXTIC_LINE,
    SEXTIC_PRIMAL,
    one_plus_t2,
)
from .strategies import nonzero_quat_polys

t = Poly.t()
i, k = QuatPoly.unit("i"), QuatPoly.unit("k")


def test_saturation_example_primal_matches_reference():
    M = SATURATION_LINE.primal.divide_real(SATURATION_CONTENT)
    sol = solve_primal(M)
    assert k_action(sol.Q) == M * sol.c
    assert sol.Q == SATURATION_Q and sol.c == 1


def test_trivial_primal_solutions():
    sol = solve_primal(k)
    assert sol.Q == QuatPoly(1) and sol.c == 1
    sol = solve_primal(i)
    assert k_action(sol.Q) == i * sol.c
    assert sol.c > 0


def test_direction_along_minus_k_needs_a_rotation():
    with pytest.raises(GenericityError):
        solve_primal_fixed(-k)
    sol = solve_primal(-k)
    assert k_action(sol.Q) == -k * sol.c
    assert sol.rotation != IDENTITY


def test_input_checks():
    with pytest.raises(NotKinematicError):
        solve_primal(QuatPoly(0, t, 1))
    with pytest.raises(PreconditionError):
        solve_primal(QuatPoly(1, 0, 0, 1))
    with pytest.raises(PreconditionError):
        solve_primal(k * (t + 1))


def test_rational_sqrt_and_square_part():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None
    assert square_part(Fraction(8)) == (2, 2)
    assert square_part(Fraction(50, 9)) == (Fraction(5, 3), 2)
    s, r = square_part(Fraction(8, 3))
    assert s * s * r == Fraction(8, 3)


def test_sign_normalization():
    assert normalize_sign(QuatPoly(-t, 1)) == QuatPoly(t, -1)
    assert normalize_sign(QuatPoly(0, 1, 0, -t)) == QuatPoly(0, -1, 0, t)


def test_rotation_schedule_is_seeded():
    a = list(rotation_schedule(3))
    assert a == list(rotation_schedule(3))
    assert a[:3] == [IDENTITY, (0, 1, 0, 1), (0, 0, 1, 1)]
    assert a != list(rotation_schedule(4))


def test_rotate_problem_swaps_axes():
    u = (0, 1, 0, 1)
    M = validate_line_poly(QuatPoly(0, 1 - t * t, 2 * t, 0), QuatPoly.zero())
    rotated = rotate_problem(M, u)
    assert rotated.primal == QuatPoly(0, 0, -2 * t, 1 - t * t)
    assert rotate_problem(rotated, (0, -1, 0, -1)) == M
    assert rotate_problem(SEXTIC_LINE, IDENTITY) == SEXTIC_LINE


def test_build_primal_part_examples():
    P, h, c, _ = build_primal_part(SEXTIC_LINE, saturation_analysis(SEXTIC_LINE))
    assert h == CONTENT and c == 1
    assert P == SEXTIC_PRIMAL * CONTENT
    P, h, c, _ = build_primal_part(CYLINDROID_SWAPPED, saturation_analysis(CYLINDROID_SWAPPED))
    assert h == one_plus_t2**2
    assert k_action(P) == CYLINDROID_SWAPPED.primal * h * c
    P, h, c, _ = build_primal_part(K_LINE, saturation_analysis(K_LINE))
    assert P == QuatPoly(1) and h == Poly([1]) and c == 1


def test_unswapped_cylindroid_primal():
    P, h, c, sol = build_primal_part(CYLINDROID, saturation_analysis(CYLINDROID))
    assert sol.Q.degree == 1
    assert k_action(P) == CYLINDROID.primal * h * c


def test_minimal_saturating_primal():
    rep = saturation_analysis(SATURATION_LINE)
    P, c = minimal_saturating_primal(SATURATION_LINE, rep)
    assert c > 0
    assert k_action(P) == SATURATION_LINE.primal * SATURATION_FACTOR * c
    expected = SATURATION_Q * (QuatPoly(t) - k) * (t - 1) * (t - 2)
    assert P == expected


@given(nonzero_quat_polys(2), st.sampled_from([1, 2, 5]))
@settings(max_examples=80, deadline=None)
def test_primal_roundtrip(Q, scale):
    g = rgcd(Q)
    Q = Q.divide_real(g)
    M = k_action(Q)
    if M.is_zero or rgcd(M).degree > 0:
        return
    sol = solve_primal(M * scale)
    assert k_action(sol.Q) == M * scale * sol.c
    assert sol.Q.degree == Q.degree
