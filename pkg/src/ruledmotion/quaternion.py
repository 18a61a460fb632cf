"""Quaternionic and dual-quaternionic polynomials.

Components are :class:`~ruledmotion.polynomial.Poly` objects in the basis
``1, i, j, k``. The indeterminate commutes with every coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from . import _kernels as K
from .errors import ModeError, PreconditionError
from .polynomial import NEG_INF, Poly, gcd

_NAMES = ("w", "x", "y", "z")


def _to_poly(obj, exact):
    if isinstance(obj, Poly):
        if exact is not None and obj.exact != exact:
            raise ModeError("mixed scalar modes in one quaternion")
        return obj
    if isinstance(obj, (list, tuple)):
        return Poly(obj, exact)
    return Poly([obj], exact)


def _infer_exact(parts) -> bool:
    for p in parts:
        if isinstance(p, Poly):
            if not p.exact:
                return False
        elif isinstance(p, float):
            return False
        elif isinstance(p, (list, tuple)) and any(isinstance(c, float) for c in p):
            return False
    return True


class QuatPoly:
    """``w + x i + y j + z k`` with polynomial components."""

    __slots__ = ("w", "x", "y", "z", "exact")

    def __init__(self, w=0, x=0, y=0, z=0, exact: bool | None = None):
        parts = (w, x, y, z)
        if exact is None:
            exact = _infer_exact(parts)
        self.w, self.x, self.y, self.z = (_to_poly(p, exact) for p in parts)
        self.exact = exact

    @classmethod
    def _raw(cls, comps, exact: bool) -> QuatPoly:
        q = object.__new__(cls)
        q.w, q.x, q.y, q.z = (Poly._raw(c, exact) for c in comps)
        q.exact = exact
        return q

    @classmethod
    def zero(cls, exact: bool = True) -> QuatPoly:
        return cls(exact=exact)

    @classmethod
    def one(cls, exact: bool = True) -> QuatPoly:
        return cls(1, exact=exact)

    @classmethod
    def unit(cls, name: str, exact: bool = True) -> QuatPoly:
        parts = [0, 0, 0, 0]
        parts["1ijk".index(name)] = 1
        return cls(*parts, exact=exact)

    @classmethod
    def scalar(cls, p, exact: bool | None = None) -> QuatPoly:
        return cls(p, exact=exact)

    # -- access ---------------------------------------------------------------

    @property
    def comps(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.w, self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.comps)

    @property
    def degree(self):
        return max(p.degree for p in self.comps)

    @property
    def is_zero(self) -> bool:
        return not any(self.comps)

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_vectorial(self) -> bool:
        return self.w.is_zero

    @property
    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def coefficient(self, k: int) -> tuple:
        """The constant quaternion multiplying ``t**k``."""
        return tuple(p[k] for p in self.comps)

    @property
    def lc(self) -> tuple:
        d = self.degree
        if d == NEG_INF:
            raise PreconditionError("zero quaternion polynomial has no leading coefficient")
        return self.coefficient(d)

    def __call__(self, t) -> tuple:
        return tuple(p(t) for p in self.comps)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuatPoly):
            return self.comps == other.comps
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.comps)

    def __repr__(self) -> str:
        return "QuatPoly(" + ", ".join(f"{n}={p}" for n, p in zip(_NAMES, self.comps)) + ")"

    def __str__(self) -> str:
        return format_quat(self)

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: QuatPoly) -> None:
        if other.exact != self.exact:
            raise ModeError("cannot combine exact and float quaternion polynomials")

    def __add__(self, other):
        if not isinstance(other, QuatPoly):
            other = QuatPoly.scalar(other, self.exact) if not isinstance(other, Poly) else QuatPoly(other, exact=self.exact)
        self._check(other)
        return QuatPoly._raw([K.add(list(a.coeffs), list(b.coeffs)) for a, b in zip(self, other)], self.exact)

    __radd__ = __add__

    def __neg__(self) -> QuatPoly:
        return QuatPoly._raw([[-c for c in p.coeffs] for p in self], self.exact)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuatPoly):
            self._check(other)
            out = K.hamilton([list(p.coeffs) for p in self], [list(p.coeffs) for p in other])
            return QuatPoly._raw(out, self.exact)
        if isinstance(other, (Poly, int, Fraction, float)):
            return QuatPoly(*(p * other for p in self), exact=self.exact)
        return NotImplemented

    def __rmul__(self, other):
        # real scalars and polynomials commute with quaternions
        if isinstance(other, (Poly, int, Fraction, float)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> QuatPoly:
        out = QuatPoly.one(self.exact)
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> QuatPoly:
        return QuatPoly(self.w, -self.x, -self.y, -self.z, exact=self.exact)

    def norm(self) -> Poly:
        """``self * conj(self)``, a real polynomial."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def scalar_part(self) -> Poly:
        return self.w

    def vector_part(self) -> QuatPoly:
        return QuatPoly(0, self.x, self.y, self.z, exact=self.exact)

    def map(self, fn) -> QuatPoly:
        return QuatPoly(*(fn(p) for p in self), exact=self.exact)

    def divide_real(self, f: Poly) -> QuatPoly:
        """Exact componentwise division by the real polynomial ``f``."""
        return self.map(lambda p: p / f)

    def mod_real(self, f: Poly) -> QuatPoly:
        return self.map(lambda p: p % f)

    def to_float(self) -> QuatPoly:
        return QuatPoly(*(p.to_float() for p in self), exact=False)

    def max_abs(self) -> float:
        return max(p.max_abs() for p in self)

    def is_close(self, other: QuatPoly, tol: float = 1e-9) -> bool:
        scale = max(self.max_abs(), other.max_abs(), 1e-300)
        diff = self.to_float() - other.to_float()
        return diff.max_abs() <= tol * scale

    def monic(self) -> QuatPoly:
        """Left-multiply by the inverse of the leading coefficient."""
        return quat_const(quat_inverse(self.lc), self.exact) * self


def quat_mul(a: QuatPoly, b: QuatPoly) -> QuatPoly:
    return a * b


def quat_const(q: Iterable, exact: bool | None = None) -> QuatPoly:
    return QuatPoly(*q, exact=exact)


def quat_inverse(q: tuple) -> tuple:
    """Inverse of a nonzero constant quaternion given as a 4-tuple."""
    n = sum(c * c for c in q)
    if isinstance(n, int):
        n = Fraction(n)
    if not n:
        raise ZeroDivisionError("zero quaternion is not invertible")
    return (q[0] / n, -q[1] / n, -q[2] / n, -q[3] / n)


def _term(q: tuple, k: int, exact: bool) -> QuatPoly:
    """The monomial ``q * t**k``."""
    zeros = [Fraction(0) if exact else 0.0] * k
    return QuatPoly._raw([zeros + [c] for c in q], exact)


def _const_mul(a: tuple, b: tuple) -> tuple:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def right_divmod(a: QuatPoly, b: QuatPoly) -> tuple[QuatPoly, QuatPoly]:
    """``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero:
        raise ZeroDivisionError("quaternion polynomial division by zero")
    a._check(b)
    binv = quat_inverse(b.lc)
    db = b.degree
    q = QuatPoly.zero(a.exact)
    r = a
    while not r.is_zero and r.degree >= db:
        c = _const_mul(r.lc, binv)
        term = _term(c, r.degree - db, a.exact)
        q = q + term
        r = r - term * b
    return q, r


def left_divmod(a: QuatPoly, b: QuatPoly) -> tuple[QuatPoly, QuatPoly]:
    """``a = b*q + r`` with ``deg r < deg b``."""
    if b.is_zero:
        raise ZeroDivisionError("quaternion polynomial division by zero")
    a._check(b)
    binv = quat_inverse(b.lc)
    db = b.degree
    q = QuatPoly.zero(a.exact)
    r = a
    while not r.is_zero and r.degree >= db:
        c = _const_mul(binv, r.lc)
        term = _term(c, r.degree - db, a.exact)
        q = q + term
        r = r - b * term
    return q, r


def right_exact_div(a: QuatPoly, b: QuatPoly) -> QuatPoly:
    q, r = right_divmod(a, b)
    if not r.is_zero:
        raise ArithmeticError("right division leaves a remainder")
    return q


def gcrd(a: QuatPoly, b: QuatPoly) -> QuatPoly:
    """Greatest common right divisor, normalized to leading coefficient 1."""
    while not b.is_zero:
        a, b = b, right_divmod(a, b)[1]
    if a.is_zero:
        return a
    return a.monic()


def rgcd(p: QuatPoly) -> Poly:
    """Monic gcd of the four component polynomials."""
    if p.is_zero:
        raise PreconditionError("rgcd of the zero polynomial")
    g = Poly.zero(p.exact)
    for c in p:
        g = gcd(g, c)
    return g


def format_quat(q: QuatPoly) -> str:
    parts = []
    for name, p in zip(("", "i", "j", "k"), q):
        if p.is_zero:
            continue
        s = str(p)
        if name:
            s = f"({s}){name}" if len(p.coeffs) > 1 or s.startswith("-") else (name if s == "1" else f"{s}{name}")
        parts.append(s)
    return " + ".join(parts) if parts else "0"


class DualQuatPoly:
    """``primal + eps * dual`` with ``eps**2 = 0``."""

    __slots__ = ("primal", "dual")

    def __init__(self, primal: QuatPoly, dual: QuatPoly | None = None):
        if dual is None:
            dual = QuatPoly.zero(primal.exact)
        if primal.exact != dual.exact:
            raise ModeError("primal and dual parts use different scalar modes")
        self.primal = primal
        self.dual = dual

    @property
    def exact(self) -> bool:
        return self.primal.exact

    @property
    def degree(self):
        return max(self.primal.degree, self.dual.degree)

    def components(self) -> tuple[Poly, ...]:
        return self.primal.comps + self.dual.comps

    def __eq__(self, other) -> bool:
        if isinstance(other, DualQuatPoly):
            return self.primal == other.primal and self.dual == other.dual
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.primal, self.dual))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.primal!r}, {self.dual!r})"

    def __str__(self) -> str:
        return f"[{self.primal}] + eps[{self.dual}]"

    def __add__(self, other: DualQuatPoly) -> DualQuatPoly:
        return DualQuatPoly(self.primal + other.primal, self.dual + other.dual)

    def __sub__(self, other: DualQuatPoly) -> DualQuatPoly:
        return DualQuatPoly(self.primal - other.primal, self.dual - other.dual)

    def __neg__(self) -> DualQuatPoly:
        return DualQuatPoly(-self.primal, -self.dual)

    def __mul__(self, other):
        if isinstance(other, DualQuatPoly):
            return DualQuatPoly(
                self.primal * other.primal,
                self.primal * other.dual + self.dual * other.primal,
            )
        if isinstance(other, QuatPoly):
            return DualQuatPoly(self.primal * other, self.dual * other)
        if isinstance(other, (Poly, int, Fraction, float)):
            return DualQuatPoly(self.primal * other, self.dual * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, QuatPoly):
            return DualQuatPoly(other * self.primal, other * self.dual)
        if isinstance(other, (Poly, int, Fraction, float)):
            return self * other
        return NotImplemented

    def conj(self) -> DualQuatPoly:
        return DualQuatPoly(self.primal.conj(), self.dual.conj())

    def eps_conj(self) -> DualQuatPoly:
        return DualQuatPoly(self.primal, -self.dual)

    def study_residual(self) -> QuatPoly:
        """``P conj(D) + D conj(P)``; zero exactly for motion polynomials."""
        p, d = self.primal, self.dual
        return p * d.conj() + d * p.conj()

    def satisfies_study(self, tol: float = 1e-9) -> bool:
        res = self.study_residual()
        if self.exact:
            return res.is_zero
        scale = max(self.primal.max_abs(), self.dual.max_abs(), 1e-300) ** 2
        return res.max_abs() <= tol * scale

    def map(self, fn) -> DualQuatPoly:
        return type(self)(self.primal.map(fn), self.dual.map(fn))

    def to_float(self) -> DualQuatPoly:
        return type(self)(self.primal.to_float(), self.dual.to_float())

    def max_abs(self) -> float:
        return max(self.primal.max_abs(), self.dual.max_abs())

    def is_close(self, other: DualQuatPoly, tol: float = 1e-9) -> bool:
        scale = max(self.max_abs(), other.max_abs(), 1e-300)
        diff = self.to_float() - other.to_float()
        return diff.max_abs() <= tol * scale


def dual_const_inverse(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    """Inverse of the constant dual quaternion ``a + eps b`` (``a`` nonzero)."""
    ainv = quat_inverse(a)
    return ainv, tuple(-c for c in _const_mul(_const_mul(ainv, b), ainv))


class MotionPoly(DualQuatPoly):
    """A dual-quaternion polynomial with nonzero primal part obeying the
    Study condition. Construction validates; use :meth:`unchecked` to skip."""

    __slots__ = ()

    def __init__(self, primal: QuatPoly, dual: QuatPoly | None = None, check: bool = True):
        super().__init__(primal, dual)
        if check:
            if self.primal.is_zero:
                raise PreconditionError("motion polynomial with zero primal part")
            if not self.satisfies_study():
                raise PreconditionError("Study condition violated")

    @classmethod
    def unchecked(cls, primal: QuatPoly, dual: QuatPoly | None = None) -> MotionPoly:
        return cls(primal, dual, check=False)

    @classmethod
    def from_dual(cls, c: DualQuatPoly, check: bool = True) -> MotionPoly:
        return cls(c.primal, c.dual, check=check)

    def _wrap(self, c: DualQuatPoly):
        return MotionPoly(c.primal, c.dual, check=False)

    def __mul__(self, other):
        out = super().__mul__(other)
        if isinstance(other, MotionPoly) and out is not NotImplemented:
            return self._wrap(out)
        return out

    def __neg__(self) -> MotionPoly:
        return self._wrap(super().__neg__())

    def conj(self) -> MotionPoly:
        return self._wrap(super().conj())

    def eps_conj(self) -> MotionPoly:
        return self._wrap(super().eps_conj())

    def norm(self) -> Poly:
        """``C conj(C)``; real because of the Study condition."""
        return self.primal.norm()
