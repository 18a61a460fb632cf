"""Dual part, full synthesis pipeline, verification and the solution family."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    FamilyBoundError,
    GenericityError,
    InternalConsistencyError,
    InvalidLineError,
    PreconditionError,
    VerificationError,
)
from .lines import LinePoly, as_line_poly, line_action, reduce, saturation_analysis, validate_line_poly
from .polynomial import DEFAULT_TOL, Poly, ext_gcd
from .primal import (
    IDENTITY,
    constant_ratio,
    k_action,
    rational_sqrt,
    rotation_schedule,
    square_part,
    solve_primal_fixed,
)
from .quaternion import DualQuatPoly, MotionPoly, QuatPoly, rgcd


@dataclass(frozen=True)
class SynthesisResult:
    C: MotionPoly
    h: Poly
    c: Fraction
    ell: Poly
    family_translation_degree: int
    rotation_applied: tuple
    Q_hat: QuatPoly
    L_hat: LinePoly


def qk(Q: QuatPoly) -> QuatPoly:
    """``Q k``, which solves the homogeneous dual equation."""
    return QuatPoly(-Q.z, Q.y, -Q.x, Q.w, exact=Q.exact)


def dual_equation_lhs(Q: QuatPoly, D: QuatPoly) -> QuatPoly:
    k = QuatPoly.unit("k", Q.exact)
    return -(Q * k * D.conj()) - D * k * Q.conj()


def _exact_div(num: Poly, den: Poly, what: str) -> Poly:
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"{what} is not a polynomial")
    return q


def dual_part_raw(Q: QuatPoly, K_d: QuatPoly) -> QuatPoly:
    """A polynomial ``D`` with ``-Q k conj(D) - D k conj(Q) = K_d``."""
    if not Q.exact:
        raise PreconditionError("dual_part_raw requires exact arithmetic")
    if K_d.is_zero:
        return QuatPoly.zero()
    q0, q1, q2, q3 = Q
    k5, k6, k7 = K_d.x, K_d.y, K_d.z
    if K_d.w:
        raise InvalidLineError("dual target must be vectorial")
    if q3.is_zero:
        raise GenericityError("q3 vanishes")
    m1 = (q0 * q2 + q1 * q3) * 2
    m2 = (q2 * q3 - q0 * q1) * 2
    m3 = q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3
    if m3.is_zero:
        raise GenericityError("m3 vanishes")
    if m1 * k5 + m2 * k6 + m3 * k7:
        raise InvalidLineError("dual target violates the Plücker relation with Q k conj(Q)")
    g, a, b = ext_gcd(q0, q3)
    if g.degree > 0:
        raise GenericityError("q0 and q3 have a common factor")
    d0 = k7 * a * Fraction(-1, 4)
    d3 = b * k7 * Fraction(-1, 4)
    num1 = k5 * (b * q2 * q2 - a * q1 * q2 - q3) + k6 * (q0 - b * q1 * q2 - a * q2 * q2)
    num2 = k5 * (a * q1 * q1 - b * q1 * q2 - q0) + k6 * (b * q1 * q1 + a * q1 * q2 - q3)
    d1 = _exact_div(num1, m3 * 2, "d1")
    d2 = _exact_div(num2, m3 * 2, "d2")
    D = QuatPoly(d0, d1, d2, d3)
    if dual_equation_lhs(Q, D) != K_d:
        raise InternalConsistencyError("dual part fails its defining equation")
    return D


def reduce_degree(D: QuatPoly, Q: QuatPoly, target_deg=None, lam: Poly | None = None):
    """``(D + lam Q k, lam, rho)`` with ``lam, rho = divmod(d0, q3)`` unless given."""
    if lam is None and Q.z.is_zero:
        lam, rho = Poly.zero(), D.w
    elif lam is None:
        lam, rho = divmod(D.w, Q.z)
    else:
        rho = D.w - lam * Q.z
    out = D + qk(Q) * lam
    if target_deg is not None and out.degree > target_deg:
        raise InternalConsistencyError(f"dual degree {out.degree} exceeds {target_deg}")
    return out, lam, rho


def verify_solution(C: DualQuatPoly, L: DualQuatPoly, tol: float = DEFAULT_TOL) -> tuple[Poly, Fraction]:
    """Return ``(h, c)`` with ``eps_conj(C) k conj(eps_conj(C)) = c h L``."""
    T = line_action(C.primal, C.dual)
    Lc = L.components()
    Tc = T.components()
    if C.exact:
        for tm, lm in zip(Tc, Lc):
            if lm:
                hc, r = divmod(tm, lm)
                break
        else:
            raise VerificationError("target line polynomial is zero")
        if r or hc.is_zero or any(tm != lm * hc for tm, lm in zip(Tc, Lc)):
            residual = max((tm - lm * hc).max_abs() for tm, lm in zip(Tc, Lc))
            raise VerificationError("image is not a real multiple of the target", residual)
        c = hc.lc
        if c <= 0:
            raise VerificationError("normalizing constant is not positive", float(c))
        return hc * (1 / c), c
    import numpy as np

    i = max(range(8), key=lambda n: Lc[n].max_abs())
    hc = divmod(Tc[i], Lc[i])[0]
    scale = max(T.primal.max_abs(), T.dual.max_abs(), 1e-300)
    residual = max((tm - lm * hc).max_abs() for tm, lm in zip(Tc, Lc)) / scale
    if not np.isfinite(residual) or residual > tol:
        raise VerificationError(f"residual {residual:.3e} exceeds tolerance", residual)
    c = hc.lc
    if c <= 0:
        raise VerificationError("normalizing constant is not positive", float(c))
    return hc * (1 / c), c


def _candidate_primals(Q: QuatPoly):
    yield Q
    if Q.z.is_zero and Q.w:
        # right multiplication by k keeps Q k conj(Q) and moves q0 into the k slot
        yield Q * QuatPoly.unit("k")


def _solve_in_frame(Lr: LinePoly, h: Poly, inject_q, inject_lambda):
    M = Lr.primal.divide_real(h)
    if inject_q is not None:
        c = constant_ratio(k_action(inject_q), M)
        if c is None or c <= 0:
            raise PreconditionError("injected Q does not solve the primal equation")
        candidates = [inject_q]
    else:
        sol = solve_primal_fixed(M)
        c = sol.c
        candidates = list(_candidate_primals(sol.Q))
    K_d = Lr.dual * c
    last = None
    for Q in candidates:
        try:
            D = dual_part_raw(Q, K_d)
        except GenericityError as exc:
            last = exc
            continue
        P = Q * h
        D, _, _ = reduce_degree(D, Q, P.degree, inject_lambda)
        return Q, P, D, c
    raise last


def synthesize(L, inject_q: QuatPoly | None = None, inject_lambda: Poly | None = None, seed: int = 0) -> SynthesisResult:
    """Minimal-degree motion polynomial guiding the moving ``k`` axis along ``L``."""
    L = as_line_poly(L)
    if not L.exact:
        raise PreconditionError("synthesize requires exact arithmetic")
    L, _ = reduce(L)
    report = saturation_analysis(L)
    L_hat = L.scale(report.ell) if report.ell.degree > 0 else L
    h = report.ell * report.g
    rotations = [IDENTITY] if inject_q is not None else rotation_schedule(seed)
    for u in rotations:
        uq = QuatPoly(*u)
        n = sum(Fraction(x) * x for x in u)
        if u == IDENTITY:
            Lr = L_hat
        else:
            Lr = validate_line_poly(uq.conj() * L_hat.primal * uq, uq.conj() * L_hat.dual * uq)
        try:
            Q, P, D, c = _solve_in_frame(Lr, h, inject_q, inject_lambda)
        except GenericityError:
            if inject_q is not None:
                raise
            continue
        if u != IDENTITY:
            # u C' / |u|^2 maps the rotated solution back with the same constant c
            P = uq * P * (1 / n)
            D = uq * D * (1 / n)
            Q = uq * Q * (1 / n)
        s, r = square_part(c)
        if s != 1:
            # a square factor of c is absorbed into C
            P, D, Q, c = P * (1 / s), D * (1 / s), Q * (1 / s), r
        C = MotionPoly(P, D)
        hv, cv = verify_solution(C, L_hat)
        if hv != h or cv != c:
            raise InternalConsistencyError("synthesized motion fails verification")
        return SynthesisResult(
            C=C,
            h=h,
            c=c,
            ell=report.ell,
            family_translation_degree=h.degree,
            rotation_applied=tuple(u),
            Q_hat=Q,
            L_hat=L_hat,
        )
    raise InternalConsistencyError("no rotation in the schedule produced a generic frame")


def solution_family(res: SynthesisResult, nu: Poly | None = None, unit: tuple = (1, 0, 0, 0)) -> MotionPoly:
    """``(P + eps (D + nu Q_hat k)) v`` for ``v = v0 + v3 k``."""
    C = res.C
    D = C.dual
    if nu is not None and not nu.is_zero:
        if nu.degree > res.family_translation_degree:
            raise FamilyBoundError(
                f"deg nu = {nu.degree} exceeds the bound {res.family_translation_degree}"
            )
        D = D + qk(res.Q_hat) * nu
    v0, v1, v2, v3 = unit
    if v1 or v2:
        raise PreconditionError("unit must be of the form v0 + v3 k")
    if not (v0 or v3):
        raise PreconditionError("unit must be nonzero")
    v = QuatPoly(v0, 0, 0, v3)
    r = rational_sqrt(Fraction(v0) ** 2 + Fraction(v3) ** 2)
    if r is not None:
        v = v * (1 / r)
    return MotionPoly(C.primal * v, D * v)


def _dq_degree(C: DualQuatPoly):
    return C.degree


def minimality_check(res, L=None) -> tuple[bool, bool]:
    """``(minimal, unique)`` for a synthesis result or a motion polynomial.

    ``minimal`` holds iff the achieved cofactor equals the content of the
    target primal part and the degree formula ``2 deg C = deg L + deg h``
    holds; ``unique`` iff that content is 1.
    """
    if isinstance(res, SynthesisResult):
        C, h, L_hat = res.C, res.h, res.L_hat
    else:
        if L is None:
            raise PreconditionError("a target line polynomial is required")
        C, L_hat = res, as_line_poly(L)
        h, _ = verify_solution(C, L_hat)
    g = rgcd(L_hat.primal)
    minimal = h == g and 2 * _dq_degree(C) == L_hat.degree + h.degree
    return minimal, g.degree == 0
