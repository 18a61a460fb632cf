"""Lines, line polynomials and their structural predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateLineError,
    InternalConsistencyError,
    InvalidLineError,
    ModeError,
    NotKinematicError,
    NotVectorialError,
    PluckerViolationError,
    UnsupportedSplittingError,
)
from .polynomial import DEFAULT_TOL, Poly, gcd, poly_sqrt, rational_roots, squarefree_decompose, sturm_real_root_count
from .quaternion import DualQuatPoly, QuatPoly, rgcd


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class PluckerLine:
    """A line with direction ``v`` and moment ``m = p x v`` for any point ``p`` on it."""

    direction: tuple
    moment: tuple
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        v, m = tuple(self.direction), tuple(self.moment)
        if len(v) != 3 or len(m) != 3:
            raise InvalidLineError("direction and moment must be 3-vectors")
        object.__setattr__(self, "direction", v)
        object.__setattr__(self, "moment", m)
        if not any(v):
            raise DegenerateLineError("zero direction vector")
        exact = not any(isinstance(c, float) for c in v + m)
        dot = _dot(v, m)
        if exact:
            if dot:
                raise PluckerViolationError(f"direction . moment = {dot}")
        else:
            scale = max(max(abs(c) for c in v), max(abs(c) for c in m), 1.0)
            if abs(dot) > self.tol * scale * scale:
                raise PluckerViolationError(f"direction . moment = {dot}")

    @classmethod
    def from_point_direction(cls, point, direction) -> PluckerLine:
        return cls(tuple(direction), _cross(point, direction))

    @property
    def exact(self) -> bool:
        return not any(isinstance(c, float) for c in self.direction + self.moment)

    def foot_point(self) -> tuple:
        """The point of the line closest to the origin."""
        v, m = self.direction, self.moment
        n = _dot(v, v)
        return tuple(c / n for c in _cross(v, m))

    def as_dual_quat(self) -> DualQuatPoly:
        exact = self.exact
        return DualQuatPoly(QuatPoly(0, *self.direction, exact=exact), QuatPoly(0, *self.moment, exact=exact))

    def same_line(self, other: PluckerLine, tol: float = DEFAULT_TOL) -> bool:
        """Homogeneous comparison (also ignores orientation)."""
        a = self.direction + self.moment
        b = other.direction + other.moment
        i = max(range(6), key=lambda n: abs(a[n]))
        if not b[i]:
            return False
        r = a[i] / b[i]
        if self.exact and other.exact:
            return all(x == r * y for x, y in zip(a, b))
        scale = max(abs(x) for x in a)
        return all(abs(x - r * y) <= tol * scale for x, y in zip(a, b))


class LinePoly(DualQuatPoly):
    """A vectorial dual-quaternion polynomial satisfying the Plücker condition.

    Instances are produced by :func:`validate_line_poly`.
    """

    __slots__ = ()

    def evaluate(self, t) -> PluckerLine:
        p, d = self.primal(t), self.dual(t)
        return PluckerLine(p[1:], d[1:])

    def norm(self) -> Poly:
        return self.primal.norm()

    def scale(self, f) -> LinePoly:
        return LinePoly(self.primal * f, self.dual * f)


def plucker_residual(primal: QuatPoly, dual: QuatPoly) -> QuatPoly:
    return primal * dual.conj() + dual * primal.conj()


def validate_line_poly(primal: QuatPoly, dual: QuatPoly, tol: float = DEFAULT_TOL) -> LinePoly:
    if primal.exact != dual.exact:
        raise ModeError("primal and dual parts use different scalar modes")
    if primal.is_zero:
        raise DegenerateLineError("primal part is zero")
    res = plucker_residual(primal, dual)
    if primal.exact:
        if primal.w or dual.w:
            raise NotVectorialError("scalar part does not vanish")
        if not res.is_zero:
            raise PluckerViolationError(f"Plücker residual {res.w}")
    else:
        scale = max(primal.max_abs(), dual.max_abs(), 1e-300)
        if max(primal.w.max_abs(), dual.w.max_abs()) > tol * scale:
            raise NotVectorialError("scalar part does not vanish")
        if res.max_abs() > tol * scale * scale:
            raise PluckerViolationError(f"Plücker residual {res.w}")
        primal = QuatPoly(0, primal.x, primal.y, primal.z, exact=False)
        dual = QuatPoly(0, dual.x, dual.y, dual.z, exact=False)
    return LinePoly(primal, dual)


def as_line_poly(obj) -> LinePoly:
    if isinstance(obj, LinePoly):
        return obj
    if isinstance(obj, DualQuatPoly):
        return validate_line_poly(obj.primal, obj.dual)
    primal, dual = obj
    return validate_line_poly(primal, dual)


def _float_sqrt(p: Poly, tol: float):
    """Heuristic square root of a float polynomial.

    The upper half of the coefficients determines the candidate root; the
    lower half must then match to within ``tol`` relative to the input.
    Repeated complex roots defeat numerical root finding, not this test.
    """
    if p.is_zero or p.degree % 2 or p.lc < 0:
        return None
    m = p.degree // 2
    s = [0.0] * (m + 1)
    s[m] = math.sqrt(p.lc)
    for k in range(m - 1, -1, -1):
        acc = sum(s[i] * s[m + k - i] for i in range(k + 1, m))
        s[k] = (p.coeffs[m + k] - acc) / (2 * s[m])
    root = Poly(s, exact=False)
    if (root * root - p).max_abs() > max(tol, 1e-12) * p.max_abs():
        return None
    return root


def is_kinematic(L: LinePoly, tol: float = DEFAULT_TOL) -> tuple[bool, Poly | None]:
    """Whether the norm of ``L`` is a square, with its root.

    In float mode the answer comes from numerical root pairing and is only a
    heuristic.
    """
    n = L.primal.norm()
    s = poly_sqrt(n) if L.exact else _float_sqrt(n, tol)
    return s is not None, s


def _content(L: DualQuatPoly) -> Poly:
    g = rgcd(L.primal)
    if L.dual.is_zero:
        return g
    return gcd(g, rgcd(L.dual))


def is_reduced(L: LinePoly) -> bool:
    """True iff no nonconstant real polynomial divides all eight components.

    A zero dual part has content zero, so the primal content decides.
    """
    L.primal.w.require_exact("is_reduced")
    return _content(L).degree == 0


def reduce(L: LinePoly) -> tuple[LinePoly, Poly]:
    L.primal.w.require_exact("reduce")
    f = _content(L)
    if f.degree == 0:
        return L, f
    return LinePoly(L.primal.divide_real(f), L.dual.divide_real(f)), f


@dataclass(frozen=True)
class SaturationReport:
    g: Poly
    ell: Poly
    sigma: Poly | None
    is_kinematic: bool
    is_saturated: bool
    is_reduced: bool
    diagnostic: bool = False


def _float_real_linear_part(f: Poly, tol: float) -> Poly:
    import numpy as np

    roots = np.roots([float(c) for c in reversed(f.coeffs)])
    real = [float(r.real) for r in roots if abs(r.imag) <= tol ** 0.5 * max(1.0, abs(r))]
    return Poly.from_roots(real, exact=False)


def saturating_factor(g: Poly, float_fallback: bool = False, tol: float = DEFAULT_TOL) -> tuple[Poly, bool]:
    """Monic product of ``t - r`` over the real roots of odd multiplicity of ``g``.

    Returns ``(ell, diagnostic)``; ``diagnostic`` is true when the float
    fallback produced a float polynomial.
    """
    ell = Poly([1])
    fallback = Poly([1.0], exact=False)
    used_fallback = False
    for f, m in squarefree_decompose(g):
        if m % 2 == 0:
            continue
        n_real = sturm_real_root_count(f)
        if n_real == 0:
            continue
        roots = rational_roots(f)
        if len(roots) != n_real:
            if not float_fallback:
                raise UnsupportedSplittingError(f"real roots of {f} are not all rational")
            used_fallback = True
            fallback = fallback * _float_real_linear_part(f, tol)
            continue
        ell = ell * Poly.from_roots(roots)
    if used_fallback:
        return ell.to_float() * fallback, True
    return ell, False


def saturation_analysis(L: LinePoly, float_fallback: bool = False) -> SaturationReport:
    L.primal.w.require_exact("saturation analysis")
    ok, sigma = is_kinematic(L)
    if not ok:
        raise NotKinematicError("the norm of the line polynomial is not a square")
    g = rgcd(L.primal)
    ell, diag = saturating_factor(g, float_fallback)
    return SaturationReport(
        g=g,
        ell=ell,
        sigma=sigma,
        is_kinematic=True,
        is_saturated=ell.degree == 0,
        is_reduced=is_reduced(L),
        diagnostic=diag,
    )


def line_action(primal: QuatPoly, dual: QuatPoly, axis: DualQuatPoly | None = None) -> DualQuatPoly:
    """``eps_conj(C) * axis * conj(eps_conj(C))`` without any validation."""
    exact = primal.exact
    if axis is None:
        axis = DualQuatPoly(QuatPoly.unit("k", exact), QuatPoly.zero(exact))
    e = DualQuatPoly(primal, -dual)
    return e * axis * e.conj()


def act_on_line(C: DualQuatPoly, axis=None) -> LinePoly:
    if isinstance(axis, PluckerLine):
        axis = axis.as_dual_quat()
    T = line_action(C.primal, C.dual, axis)
    try:
        return validate_line_poly(T.primal, T.dual)
    except InvalidLineError as exc:
        raise InternalConsistencyError(f"image is not a line polynomial: {exc}") from exc


def line_poly(primal, dual) -> LinePoly:
    """Convenience constructor from 3-tuples of polynomial-like components."""
    return validate_line_poly(QuatPoly(0, *primal), QuatPoly(0, *dual))

