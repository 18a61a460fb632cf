"""Actions of motion polynomials and their factorization into simpler factors.

Constant dual quaternions are passed around as pairs ``(primal, dual)`` of
4-tuples. Linear factors are kept in the normal form ``t - h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InternalConsistencyError,
    InvalidFactorError,
    NonGenericFactorizationError,
    PreconditionError,
    SingularParameterError,
)
from .lines import PluckerLine
from .polynomial import DEFAULT_TOL, Poly, ext_gcd
from .quaternion import DualQuatPoly, MotionPoly, QuatPoly, _const_mul, quat_inverse, rgcd

# -- constant dual quaternions ------------------------------------------------


def _zero4(exact: bool) -> tuple:
    z = Fraction(0) if exact else 0.0
    return (z, z, z, z)


def _add4(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub4(a, b):
    return tuple(x - y for x, y in zip(a, b))


def dq_mul(a, b):
    return (_const_mul(a[0], b[0]), _add4(_const_mul(a[0], b[1]), _const_mul(a[1], b[0])))


def dq_sub(a, b):
    return (_sub4(a[0], b[0]), _sub4(a[1], b[1]))


def dq_inverse(a):
    """``(p + eps d)^-1 = p^-1 - eps p^-1 d p^-1``; needs ``p`` nonzero."""
    pinv = quat_inverse(a[0])
    return pinv, tuple(-c for c in _const_mul(_const_mul(pinv, a[1]), pinv))


def dq_conj(a):
    return tuple((x[0], -x[1], -x[2], -x[3]) for x in a)


def dq_const(a, exact: bool | None = None) -> DualQuatPoly:
    return DualQuatPoly(QuatPoly(*a[0], exact=exact), QuatPoly(*a[1], exact=exact))


def _coeff_list(C: DualQuatPoly) -> list:
    deg = C.degree
    if deg == -float("inf"):
        return []
    return [(C.primal.coefficient(k), C.dual.coefficient(k)) for k in range(deg + 1)]


def _from_coeffs(cs: list, exact: bool) -> DualQuatPoly:
    comps = [[c[part][n] for c in cs] for part in (0, 1) for n in range(4)]
    return DualQuatPoly(QuatPoly._raw(comps[:4], exact), QuatPoly._raw(comps[4:], exact))


def _as_motion(C: DualQuatPoly) -> DualQuatPoly:
    return MotionPoly.unchecked(C.primal, C.dual) if C.primal else C


def dq_right_divmod(A: DualQuatPoly, B: DualQuatPoly) -> tuple[DualQuatPoly, DualQuatPoly]:
    """``A = Q B + R`` with ``deg R < deg B``; the leading coefficient of ``B``
    needs an invertible primal part."""
    exact = A.exact
    a = _coeff_list(A)
    b = _coeff_list(B)
    if not b:
        raise ZeroDivisionError("division by the zero dual quaternion polynomial")
    db = len(b) - 1
    try:
        inv = dq_inverse(b[-1])
    except ZeroDivisionError as exc:
        raise NonGenericFactorizationError("leading coefficient of the divisor is not invertible") from exc
    if len(a) - 1 < db:
        return _from_coeffs([], exact), A
    q = [None] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = dq_mul(a[k + db], inv)
        q[k] = c
        for j in range(db + 1):
            a[k + j] = dq_sub(a[k + j], dq_mul(c, b[j]))
    return _as_motion(_from_coeffs(q, exact)), _from_coeffs(a[:db], exact)


# -- actions ----------------------------------------------------------------------


def act_on_point(C: DualQuatPoly, point, t) -> tuple:
    """Image of ``point`` under the displacement ``C(t)``."""
    p = C.primal(t)
    d = C.dual(t)
    n = sum(c * c for c in p)
    if not n:
        raise SingularParameterError(f"the motion has zero norm at t = {t}")
    zero = _zero4(C.exact)
    x = (zero[0], *point)
    e = (p, tuple(-c for c in d))
    cc = (tuple((p[0], -p[1], -p[2], -p[3])), tuple((d[0], -d[1], -d[2], -d[3])))
    img = dq_mul(dq_mul(e, ((1, 0, 0, 0), x)), cc)
    return tuple(c / n for c in img[1][1:])


# -- linear factors ---------------------------------------------------------------


@dataclass(frozen=True)
class LinearFactor:
    """The linear motion polynomial ``t - h``."""

    primal: tuple
    dual: tuple

    @property
    def exact(self) -> bool:
        return not any(isinstance(c, float) for c in self.primal + self.dual)

    def poly(self) -> DualQuatPoly:
        exact = self.exact
        one = Fraction(1) if exact else 1.0
        return DualQuatPoly(
            QuatPoly(*(Poly([-c, one if n == 0 else 0], exact) for n, c in enumerate(self.primal)), exact=exact),
            QuatPoly(*(Poly([-c], exact) for c in self.dual), exact=exact),
        )

    def norm(self) -> Poly:
        return self.poly().primal.norm()

    def axis(self) -> PluckerLine:
        """Eps-conjugate of twice the vector part: the revolute axis."""
        v = tuple(2 * c for c in self.primal[1:])
        m = tuple(-2 * c for c in self.dual[1:])
        return PluckerLine(v, m, tol=1e-6)


def _check_norm(E: DualQuatPoly, f: Poly, tol: float) -> None:
    n = E.primal.norm()
    s = E.study_residual()
    if E.exact:
        ok = n == f and s.is_zero
    else:
        # the Study residual inherits the conditioning of the factor, so it is
        # measured relative to |primal| |dual| with a looser factor
        scale = max(1.0, E.primal.max_abs()) * max(1.0, E.dual.max_abs())
        ok = n.is_close(f, 1e3 * tol) and s.max_abs() <= 1e3 * tol * scale
    if not ok:
        raise InvalidFactorError(f"{f} is not the norm of a right factor")


def extract_right_factor_quadratic(C: DualQuatPoly, f: Poly, tol: float = DEFAULT_TOL):
    """Split ``C = C_rest (t - h)`` with ``(t - h) conj(t - h) = f``."""
    if f.degree != 2:
        raise PreconditionError("f must be quadratic")
    f = f.monic()
    R = DualQuatPoly(C.primal.map(lambda p: p % f), C.dual.map(lambda p: p % f))
    r1 = (R.primal.coefficient(1), R.dual.coefficient(1))
    r0 = (R.primal.coefficient(0), R.dual.coefficient(0))
    if C.exact:
        singular = not any(r1[0])
    else:
        singular = sum(c * c for c in r1[0]) <= (tol * max(1.0, C.max_abs())) ** 2
    if singular:
        raise NonGenericFactorizationError("remainder modulo f has a non-invertible leading coefficient")
    hp, hd = dq_mul(dq_inverse(r1), r0)
    factor = LinearFactor(tuple(-c for c in hp), tuple(-c for c in hd))
    E = factor.poly()
    _check_norm(E, f, tol)
    rest, rem = dq_right_divmod(C, E)
    if C.exact:
        if rem.primal or rem.dual:
            raise InvalidFactorError("t - h does not divide C")
    elif rem.max_abs() > 1e3 * tol * max(1.0, C.max_abs()):
        raise InvalidFactorError("t - h does not divide C")
    return rest, factor


def align_factor(C_rest: DualQuatPoly, E: DualQuatPoly, lead) -> tuple[DualQuatPoly, DualQuatPoly]:
    """Move the constant ``lead`` across the split: ``(C_rest lead^-1, lead E)``."""
    inv = dq_const(dq_inverse(lead), C_rest.exact)
    return C_rest * inv, dq_const(lead, E.exact) * E


def peel_translation_factor(C: DualQuatPoly, f: Poly, m: int = 1):
    """Split ``C = (Q + eps K)(f^m + eps e7 k)``."""
    fm = f**m
    P, D = C.primal, C.dual
    try:
        Q = P.divide_real(fm)
    except ArithmeticError as exc:
        raise PreconditionError(f"f^{m} does not divide the primal part") from exc
    if rgcd(Q).degree > 0 and divmod(rgcd(Q), f)[1].is_zero:
        raise PreconditionError("f still divides the content of the primal cofactor")
    q = Q.norm()
    g, w, _ = ext_gcd(q, fm)
    if g.degree > 0:
        raise PreconditionError("norm of the primal cofactor is not coprime to f")
    F = (Q.conj() * D * w).mod_real(fm)
    if F.w or F.x or F.y:
        raise InternalConsistencyError("translation factor is not a multiple of k")
    K = (D - Q * F).divide_real(fm)
    E = MotionPoly(QuatPoly(fm), F)
    rest = MotionPoly.unchecked(Q, K)
    if rest * E != C:
        raise InternalConsistencyError("translation factor does not re-multiply")
    return rest, E


# -- full factorization -------------------------------------------------------------


def pair_norm_roots(n: Poly, tol: float = DEFAULT_TOL) -> list[Poly]:
    """Monic real quadratics from conjugate root pairs, sorted by decreasing real part."""
    import numpy as np

    roots = np.roots([float(c) for c in reversed(n.coeffs)])
    scale = max(1.0, float(np.max(np.abs(roots)))) if len(roots) else 1.0
    upper = [z for z in roots if z.imag > tol**0.5 * scale]
    if 2 * len(upper) != len(roots):
        raise NonGenericFactorizationError("norm polynomial has real roots")
    upper.sort(key=lambda z: -z.real)
    return [Poly([float(abs(z) ** 2), float(-2 * z.real), 1.0], exact=False) for z in upper]


def factor_into_linear(C: DualQuatPoly, order: list[Poly] | None = None, tol: float = DEFAULT_TOL):
    """``C = lead (t - h_1) ... (t - h_n)`` where ``order`` lists the norms of
    the factors from left to right."""
    if order is None:
        if C.exact:
            raise PreconditionError("exact factorization needs an explicit order of quadratic factors")
        order = pair_norm_roots(C.primal.norm(), tol)
    factors = []
    rest = C
    for step, f in enumerate(reversed(order)):
        try:
            rest, factor = extract_right_factor_quadratic(rest, f, tol)
        except NonGenericFactorizationError as exc:
            raise NonGenericFactorizationError(f"step {step + 1}: {exc}") from exc
        factors.insert(0, factor)
    if rest.degree > 0:
        raise InvalidFactorError("the given norms do not exhaust the motion")
    lead = (rest.primal.coefficient(0), rest.dual.coefficient(0))
    return lead, factors


def multiply_factors(lead, factors, exact: bool) -> DualQuatPoly:
    out = dq_const(lead, exact)
    for fac in factors:
        out = out * fac.poly()
    return out
