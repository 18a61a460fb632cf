"""Primal part: solve ``Q k conj(Q) = c M`` for a vectorial ``M`` with square norm."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import (
    GenericityError,
    InternalConsistencyError,
    NotKinematicError,
    PreconditionError,
    UnsupportedSplittingError,
)
from .lines import LinePoly, SaturationReport, validate_line_poly
from .polynomial import Poly, poly_sqrt, squarefree_decompose
from .quaternion import DualQuatPoly, QuatPoly, gcrd, rgcd, right_divmod

IDENTITY = (1, 0, 0, 0)


@dataclass(frozen=True)
class PrimalSolution:
    Q: QuatPoly
    c: Fraction
    rotation: tuple
    M: QuatPoly


def k_action(Q: QuatPoly) -> QuatPoly:
    """``Q k conj(Q)``."""
    return Q * QuatPoly.unit("k", Q.exact) * Q.conj()


def rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def _square_split(n: int) -> tuple[int, int]:
    """``(s, r)`` with ``n = s^2 r``; ``r`` is squarefree unless ``n`` has a
    large repeated prime factor beyond the trial-division bound."""
    s, r, p = 1, 1, 2
    while p * p <= n and p < 100_000:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            r *= p
        p += 1 if p == 2 else 2
    root = math.isqrt(n)
    if root * root == n:
        return s * root, r
    return s, r * n


def square_part(c: Fraction) -> tuple[Fraction, Fraction]:
    """``(s, r)`` with ``c = s^2 r``, ``s > 0`` rational and ``r`` a
    squarefree integer (up to the trial-division bound)."""
    c = Fraction(c)
    if c <= 0:
        raise PreconditionError("square_part needs a positive rational")
    s, r = _square_split(c.numerator * c.denominator)
    return Fraction(s, c.denominator), Fraction(r)


def normalize_sign(Q: QuatPoly) -> QuatPoly:
    """Make the leading coefficient of the first nonzero of ``w, z, y, x`` positive."""
    for p in (Q.w, Q.z, Q.y, Q.x):
        if p:
            return -Q if p.lc < 0 else Q
    return Q


def constant_ratio(T: QuatPoly, M: QuatPoly):
    """The constant ``c`` with ``T = c M``, or ``None``."""
    for tm, mm in zip(T, M):
        if mm:
            q, r = divmod(tm, mm)
            if r or q.degree > 0:
                return None
            c = q[0]
            return c if T == M * c else None
    return None


def _solve_direct(M: QuatPoly, sigma: Poly) -> tuple[QuatPoly, Fraction]:
    k = QuatPoly.unit("k")
    # For M = Q k conj(Q) with sigma = |Q|^2 one has sigma - M k = 2 Q (q0 - q3 k)
    # and (sigma + m3)/2 = q0^2 + q3^2, so a greatest common right divisor
    # strips the unwanted right factor.
    B = QuatPoly(sigma) - M * k
    n = (sigma + M.z) * Fraction(1, 2)
    if n.is_zero:
        raise GenericityError("M is a negative multiple of k")
    w = gcrd(B, QuatPoly(n))
    Q, r = right_divmod(B, w)
    if r:
        raise InternalConsistencyError("right divisor does not divide")
    g = rgcd(Q)
    if g.degree > 0:
        Q = Q.divide_real(g)
    c = constant_ratio(k_action(Q), M)
    if c is None or c <= 0:
        raise GenericityError("right-factor construction did not produce a constant multiple of M")
    return Q, c


def _check_input(M: QuatPoly) -> Poly:
    if not M.exact:
        raise PreconditionError("solve_primal requires exact arithmetic")
    if M.is_zero or not M.is_vectorial:
        raise PreconditionError("M must be a nonzero vectorial quaternion polynomial")
    if rgcd(M).degree > 0:
        raise PreconditionError("M must have trivial real content")
    sigma = poly_sqrt(M.norm())
    if sigma is None:
        raise NotKinematicError("norm of M is not a square")
    return sigma


def rotate_quat(Q: QuatPoly, u: tuple) -> QuatPoly:
    """``conj(u) Q u / |u|^2``."""
    uq = QuatPoly(*u)
    n = sum(Fraction(x) * x for x in u)
    return (uq.conj() * Q * uq) * (1 / n)


def unrotate_quat(Q: QuatPoly, u: tuple) -> QuatPoly:
    uq = QuatPoly(*u)
    n = sum(Fraction(x) * x for x in u)
    return (uq * Q * uq.conj()) * (1 / n)


def rotation_schedule(seed: int = 0, extra: int = 16) -> Iterator[tuple]:
    """Identity, two half-turns, then seeded pseudo-random integer quaternions."""
    yield IDENTITY
    yield (0, 1, 0, 1)
    yield (0, 0, 1, 1)
    rng = random.Random(seed)
    for _ in range(extra):
        u = tuple(rng.randint(-3, 3) for _ in range(4))
        if any(u):
            yield u


def _attempt(M: QuatPoly, sigma: Poly, u: tuple) -> PrimalSolution:
    """One construction attempt in the frame rotated by ``u``."""
    Mr = M if u == IDENTITY else rotate_quat(M, u)
    Qr, c = _solve_direct(Mr, sigma)
    if u == IDENTITY:
        Q = Qr
    else:
        # u Qr k conj(Qr) conj(u) = c u Mr conj(u) = c |u|^2 M
        Q = QuatPoly(*u) * Qr
        c = c * sum(Fraction(x) * x for x in u)
    r = rational_sqrt(c)
    if r is not None and r != 1:
        Q = Q * (1 / r)
        c = Fraction(1)
    Q = normalize_sign(Q)
    if k_action(Q) != M * c:
        raise InternalConsistencyError("primal solution fails its defining identity")
    return PrimalSolution(Q=Q, c=Fraction(c), rotation=tuple(u), M=M)


def solve_primal_fixed(M: QuatPoly) -> PrimalSolution:
    """Like :func:`solve_primal` but without rotations; raises
    :class:`GenericityError` if the direct construction fails."""
    return _attempt(M, _check_input(M), IDENTITY)


def solve_primal(M: QuatPoly, rotations=None, seed: int = 0) -> PrimalSolution:
    sigma = _check_input(M)
    schedule = rotation_schedule(seed) if rotations is None else rotations
    for u in schedule:
        try:
            return _attempt(M, sigma, tuple(u))
        except GenericityError:
            continue
    raise InternalConsistencyError("no rotation in the schedule made the primal construction succeed")


def rotate_problem(L: DualQuatPoly, u: tuple) -> LinePoly:
    """Rotate the surface by ``conj(u) L u / |u|^2``; undo with ``u L conj(u) / |u|^2``."""
    if not any(u):
        raise PreconditionError("rotation quaternion must be nonzero")
    if not all(isinstance(x, (int, Fraction)) for x in u):
        raise PreconditionError("rotation quaternion must be rational")
    return validate_line_poly(rotate_quat(L.primal, u), rotate_quat(L.dual, u))


def build_primal_part(L: LinePoly, report: SaturationReport, seed: int = 0):
    """``(P, h, c, sol)`` with ``P k conj(P) = c h (ell L)_p`` and ``h = ell g``."""
    h = report.ell * report.g
    M = L.primal.divide_real(report.g)
    sol = solve_primal(M, seed=seed)
    return sol.Q * h, h, sol.c, sol


def minimal_saturating_primal(L: LinePoly, report: SaturationReport, seed: int = 0):
    """``(P, c)`` with ``P k conj(P) = c ell L_p`` and ``deg P`` as small as possible.

    Writes ``ell g = s^2 r`` with ``r`` squarefree; each quadratic factor
    ``(t-a)^2 + b^2`` of ``r`` is produced by ``(t-a) - b k``.
    """
    M = L.primal.divide_real(report.g)
    sol = solve_primal(M, seed=seed)
    s = Poly([1])
    factors = []
    for f, m in squarefree_decompose(report.ell * report.g):
        s = s * f ** (m // 2)
        if m % 2:
            factors.append(f)
    P = sol.Q * s
    k = QuatPoly.unit("k")
    for f in factors:
        if f.degree != 2:
            raise UnsupportedSplittingError(f"cannot split {f} into quadratic factors over the rationals")
        a = -f[1] / 2
        b = rational_sqrt(f[0] - a * a)
        if b is None:
            raise UnsupportedSplittingError(f"{f} is not a sum of rational squares in the needed form")
        P = P * (QuatPoly(Poly([-a, 1])) - k * b)
    return P, sol.c
