"""Rational motions that guide a line along a kinematic ruled surface.

The main entry points are :func:`synthesize` (minimal motion for a line
polynomial), :func:`verify_solution`, the factorization helpers in
:mod:`ruledmotion.motion` and :func:`interpolate_three_lines`.
"""

from ._kernels import BACKEND
from .dual import SynthesisResult, minimality_check, solution_family, synthesize, verify_solution
from .errors import (
    DegenerateInputError,
    GenericityError,
    InterpolationError,
    InvalidLineError,
    NonGenericFactorizationError,
    NotKinematicError,
    RuledMotionError,
    VerificationError,
)
from .interpolation import BennettResult, interpolate_three_lines, preimage_half_turn
from .lines import LinePoly, PluckerLine, act_on_line, is_kinematic, saturation_analysis, validate_line_poly
from .motion import LinearFactor, act_on_point, extract_right_factor_quadratic, factor_into_linear, peel_translation_factor
from .polynomial import Poly, format_poly, parse_poly
from .primal import solve_primal
from .quaternion import DualQuatPoly, MotionPoly, QuatPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BennettResult",
    "DegenerateInputError",
    "GenericityError",
    "InterpolationError",
    "InvalidLineError",
    "NonGenericFactorizationError",
    "NotKinematicError",
    "RuledMotionError",
    "VerificationError",
    "DualQuatPoly",
    "LinePoly",
    "LinearFactor",
    "MotionPoly",
    "PluckerLine",
    "Poly",
    "QuatPoly",
    "SynthesisResult",
    "act_on_line",
    "act_on_point",
    "extract_right_factor_quadratic",
    "factor_into_linear",
    "format_poly",
    "interpolate_three_lines",
    "is_kinematic",
    "minimality_check",
    "parse_poly",
    "peel_translation_factor",
    "preimage_half_turn",
    "saturation_analysis",
    "solution_family",
    "solve_primal",
    "synthesize",
    "validate_line_poly",
    "verify_solution",
]
