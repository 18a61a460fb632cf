"""Degree-two motions whose moving ``k`` axis passes through three given lines.

Everything here runs in float mode. Quaternion polynomials are handled as
numpy arrays of shape ``(degree + 1, 4)`` (ascending powers) while the linear
systems are assembled, and converted to :class:`QuatPoly` at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateInputError,
    InterpolationError,
    InvalidLineError,
    NonGenericFactorizationError,
)
from .lines import LinePoly, PluckerLine, act_on_line, validate_line_poly
from .motion import dq_conj, dq_mul, factor_into_linear, multiply_factors, pair_norm_roots
from .polynomial import Poly
from .quaternion import MotionPoly, QuatPoly

_K = np.array([0.0, 0.0, 0.0, 1.0])


def _ham(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ]
    )


def _pmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((len(A) + len(B) - 1, 4))
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            out[i + j] += _ham(a, b)
    return out


def _pconj(A: np.ndarray) -> np.ndarray:
    return A * np.array([1.0, -1.0, -1.0, -1.0])


def _to_quat(A: np.ndarray) -> QuatPoly:
    return QuatPoly(*(Poly([float(c) for c in A[:, n]], exact=False) for n in range(4)), exact=False)


def lagrange_basis(knots) -> list[Poly]:
    """Float Lagrange polynomials for three (or more) distinct knots."""
    knots = [float(x) for x in knots]
    basis = []
    for i, ti in enumerate(knots):
        others = [x for j, x in enumerate(knots) if j != i]
        den = math.prod(ti - x for x in others)
        basis.append(Poly.from_roots(others, exact=False) * (1.0 / den))
    return basis


def preimage_half_turn(Lp, phi: float = 0.0) -> tuple:
    """A quaternion ``p`` with ``p k conj(p) = Lp``.

    For ``phi = 0`` it is the scaled half-turn about the bisector of ``k`` and
    ``Lp``; other values of ``phi`` compose with a rotation about ``k``.
    """
    v = np.asarray(Lp, dtype=float)
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise DegenerateInputError("zero direction has no preimage")
    s = np.array([0.0, *(v / n)]) + _K
    ns = float(np.linalg.norm(s))
    if ns <= 1e-12:
        # Lp points along -k: the half-turn about i does the job
        axis = np.array([0.0, 1.0, 0.0, 0.0])
    else:
        axis = s / ns
    p = math.sqrt(n) * _ham(axis, np.array([math.cos(phi), 0.0, 0.0, math.sin(phi)]))
    return tuple(float(c) for c in p)


@dataclass(frozen=True)
class BennettResult:
    C: MotionPoly
    leading: tuple
    factorization_a: tuple
    factorization_b: tuple
    axes: tuple
    preimages: tuple
    L: LinePoly
    residuals: dict = field(default_factory=dict)


# Rows expressing structural identities (Plücker, Study) are weighted so that
# rounding in the input data is absorbed by the interpolation conditions.
_HARD = 1e6


def _solve(A: np.ndarray, b: np.ndarray, tol: float, what: str, hard: int = 0) -> np.ndarray:
    """Least squares; the first ``hard`` rows are weighted up."""
    w = np.ones(len(b))
    w[:hard] = _HARD
    x, _, rank, sv = np.linalg.lstsq(A * w[:, None], b * w, rcond=None)
    if rank < A.shape[1]:
        raise InterpolationError(f"{what}: rank {rank} < {A.shape[1]} unknowns (singular values {sv})")
    scale = max(float(np.linalg.norm(b)), 1.0)
    res = float(np.linalg.norm(A @ x - b)) / scale
    if res > tol:
        raise InterpolationError(f"{what}: residual {res:.3e} exceeds {tol:.1e}")
    return x


def _affine_system(fn, n: int):
    """``(A, b)`` such that ``fn(x) = A x - b`` for an affine ``fn``."""
    f0 = fn(np.zeros(n))
    A = np.array([fn(e) - f0 for e in np.eye(n)]).T
    return A, -f0


def _dual_line(Lp: np.ndarray, knots, targets, tol: float) -> np.ndarray:
    """The vectorial ``L_d`` of degree ``deg Lp`` satisfying the Plücker
    identity and ``L_d(t_i) = targets[i]``."""
    deg = len(Lp) - 1

    def residual(x):
        Ld = np.zeros((deg + 1, 4))
        Ld[:, 1:] = x.reshape(deg + 1, 3)
        pl = np.zeros(2 * deg + 1)
        for i in range(deg + 1):
            for j in range(deg + 1):
                pl[i + j] += Lp[i, 1:] @ Ld[j, 1:]
        rows = [pl]
        for t, target in zip(knots, targets):
            rows.append(sum(Ld[k, 1:] * t**k for k in range(deg + 1)) - target)
        return np.concatenate(rows)

    A, b = _affine_system(residual, 3 * (deg + 1))
    x = _solve(A, b, tol, "dual part of the line polynomial", hard=2 * deg + 1)
    Ld = np.zeros((deg + 1, 4))
    Ld[:, 1:] = x.reshape(deg + 1, 3)
    return Ld


def _dual_motion(P: np.ndarray, Ld: np.ndarray, tol: float) -> np.ndarray:
    """``D`` with ``-(P k conj(D) + D k conj(P)) = L_d``, the Study condition
    and the constant ``i`` coefficient pinned to zero."""
    deg = len(P) - 1
    Pk = _pmul(P, _K[None, :])
    # the homogeneous solutions are real multiples of P k; pin the component
    # of the constant coefficient where P k is largest unless i is usable
    pin = 1 if abs(Pk[0, 1]) > 1e-6 * np.abs(Pk).max() else int(np.argmax(np.abs(Pk[0])))

    def residual(x):
        D = x.reshape(deg + 1, 4)
        lhs = -(_pmul(Pk, _pconj(D)) + _pmul(_pmul(D, _K[None, :]), _pconj(P)))
        study = _pmul(P, _pconj(D)) + _pmul(D, _pconj(P))
        return np.concatenate([study[:, 0], [D[0, pin]], (lhs - Ld[: len(lhs)]).ravel()])

    A, b = _affine_system(residual, 4 * (deg + 1))
    x = _solve(A, b, tol, "dual part of the motion", hard=2 * deg + 2)
    return x.reshape(deg + 1, 4)


def _proportionality(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))


def transform_line(line: PluckerLine, c) -> PluckerLine:
    """Image of ``line`` under the constant dual quaternion ``c``."""
    e = (tuple(c[0]), tuple(-x for x in c[1]))
    img = dq_mul(dq_mul(e, ((0.0, *line.direction), (0.0, *line.moment))), dq_conj(e))
    return PluckerLine(img[0][1:], img[1][1:], tol=1e-6)


def interpolate_three_lines(
    L0: PluckerLine,
    L1: PluckerLine,
    L2: PluckerLine,
    knots=(-1.0, 0.0, 1.0),
    weights=(1.0, 1.0, 1.0),
    phis=(0.0, 0.0, 0.0),
    fixed_frame: bool = False,
    tol: float = 1e-8,
) -> BennettResult:
    """Degree-two motion whose moving ``k`` axis is ``w_i L_i`` at ``t_i``.

    With ``fixed_frame`` the four axes are mapped by the leading coefficient
    of the motion; by default they are the raw factor axes.
    """
    lines = (L0, L1, L2)
    knots = tuple(float(x) for x in knots)
    weights = tuple(float(x) for x in weights)
    if len(knots) != 3 or len(weights) != 3 or len(phis) != 3:
        raise DegenerateInputError("exactly three knots, weights and angles are required")
    if not knots[0] < knots[1] < knots[2]:
        raise DegenerateInputError("knots must be strictly increasing")
    if any(w == 0.0 for w in weights):
        raise DegenerateInputError("weights must be nonzero")
    for i in range(3):
        for j in range(i + 1, 3):
            if lines[i].same_line(lines[j], 1e-9):
                raise DegenerateInputError(f"lines {i} and {j} coincide")

    ps = [np.array(preimage_half_turn(np.array(L.direction) * w, phi)) for L, w, phi in zip(lines, weights, phis)]
    basis = lagrange_basis(knots)
    P = np.zeros((3, 4))
    for p, ell in zip(ps, basis):
        for k in range(3):
            P[k] += p * float(ell[k])
    Lp = _pmul(_pmul(P, _K[None, :]), _pconj(P))
    targets = [np.array(L.moment, dtype=float) * w for L, w in zip(lines, weights)]
    Ld = _dual_line(Lp, knots, targets, tol)
    D = _dual_motion(P, Ld, tol)

    try:
        L = validate_line_poly(_to_quat(Lp), _to_quat(Ld), tol=1e-6)
    except InvalidLineError as exc:
        raise InterpolationError(f"interpolating surface is not a line polynomial: {exc}") from exc
    C = MotionPoly.unchecked(_to_quat(P), _to_quat(D))
    scale = max(C.max_abs(), 1.0) ** 2
    study = C.study_residual().max_abs() / scale
    if study > tol:
        raise InterpolationError(f"Study residual {study:.3e} exceeds {tol:.1e}")

    image = act_on_line(C)
    knot_res = 0.0
    for t, L_in in zip(knots, lines):
        got = image.primal(t)[1:] + image.dual(t)[1:]
        knot_res = max(knot_res, _proportionality(got, L_in.direction + L_in.moment))
    if knot_res > tol:
        raise InterpolationError(f"motion misses an input line by {knot_res:.3e}")

    try:
        order = pair_norm_roots(C.primal.norm())
    except NonGenericFactorizationError as exc:
        raise InterpolationError(f"norm polynomial does not split into two quadratics: {exc}") from exc
    if len(order) != 2:
        raise InterpolationError("norm polynomial does not have degree four")
    lead_a, fac_a = factor_into_linear(C, order)
    lead_b, fac_b = factor_into_linear(C, order[::-1])
    refactor = 0.0
    for lead, facs in ((lead_a, fac_a), (lead_b, fac_b)):
        diff = multiply_factors(lead, facs, exact=False) - C
        refactor = max(refactor, diff.max_abs() / max(C.max_abs(), 1e-300))

    axes = [fac_a[0].axis(), fac_a[1].axis(), fac_b[1].axis(), fac_b[0].axis()]
    if fixed_frame:
        axes = [transform_line(a, lead_a) for a in axes]
    return BennettResult(
        C=C,
        leading=lead_a,
        factorization_a=tuple(fac_a),
        factorization_b=tuple(fac_b),
        axes=tuple(axes),
        preimages=tuple(tuple(float(c) for c in p) for p in ps),
        L=L,
        residuals={"knots": knot_res, "study": study, "refactor": refactor},
    )


def clip_to_box(line: PluckerLine, half: float):
    """Endpoints of the part of ``line`` inside the cube ``[-half, half]^3``,
    or ``None`` if the line misses it."""
    foot = np.asarray(line.foot_point(), dtype=float)
    d = np.asarray(line.direction, dtype=float)
    d = d / np.linalg.norm(d)
    lo, hi = -np.inf, np.inf
    for p, v in zip(foot, d):
        if abs(v) < 1e-15:
            if abs(p) > half:
                return None
            continue
        a, b = sorted(((-half - p) / v, (half - p) / v))
        lo, hi = max(lo, a), min(hi, b)
    if lo > hi:
        return None
    return foot + lo * d, foot + hi * d


def ruled_surface_obj(
    L: LinePoly,
    t_range=(-1.0, 1.0),
    samples: int = 50,
    clip: float = 10.0,
    axes=(),
) -> str:
    """Wavefront OBJ text: ruling quads of the surface clipped to a cube and
    optional axis segments as ``l`` elements."""
    if samples < 2:
        raise ValueError("at least two samples are required")
    out = ["# ruled surface strip"]
    t0, t1 = (float(x) for x in t_range)
    count = 0
    previous = None
    faces = []
    for n in range(samples):
        t = t0 + (t1 - t0) * n / (samples - 1)
        seg = clip_to_box(L.evaluate(t), clip)
        if seg is None:
            previous = None
            continue
        for x, y, z in seg:
            out.append(f"v {x:.9g} {y:.9g} {z:.9g}")
        a = count + 1
        count += 2
        if previous is not None:
            faces.append(f"f {previous} {previous + 1} {a + 1} {a}")
        previous = a
    out.extend(faces)
    for axis in axes:
        seg = clip_to_box(axis, clip)
        if seg is None:
            continue
        for x, y, z in seg:
            out.append(f"v {x:.9g} {y:.9g} {z:.9g}")
        out.append(f"l {count + 1} {count + 2}")
        count += 2
    return "\n".join(out) + "\n"


__all__ = [
    "BennettResult",
    "clip_to_box",
    "interpolate_three_lines",
    "lagrange_basis",
    "preimage_half_turn",
    "ruled_surface_obj",
    "transform_line",
]
