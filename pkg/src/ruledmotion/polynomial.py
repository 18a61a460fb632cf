"""Univariate polynomials over the rationals or binary64 floats.

A :class:`Poly` is an immutable ascending-degree coefficient tuple. Exact
polynomials hold :class:`fractions.Fraction` coefficients (always reduced,
positive denominator); float polynomials hold ``float``. The two modes never
mix inside one computation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernels as K
from .errors import ModeError, PreconditionError

NEG_INF = -math.inf
DEFAULT_TOL = 1e-9


def _trim(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class Poly:
    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs: Iterable = (), exact: bool | None = None):
        cs = list(coeffs)
        if exact is None:
            exact = not any(isinstance(c, float) for c in cs)
        if exact:
            conv = []
            for c in cs:
                if isinstance(c, float):
                    raise ModeError("float coefficient in an exact polynomial")
                conv.append(c if type(c) is Fraction else Fraction(c))
        else:
            conv = []
            for c in cs:
                if isinstance(c, Fraction):
                    raise ModeError("rational coefficient in a float polynomial")
                conv.append(float(c))
        self.coeffs = _trim(conv)
        self.exact = exact

    @classmethod
    def _raw(cls, cs, exact: bool) -> Poly:
        p = object.__new__(cls)
        p.coeffs = _trim(list(cs))
        p.exact = exact
        return p

    @classmethod
    def zero(cls, exact: bool = True) -> Poly:
        return cls._raw((), exact)

    @classmethod
    def const(cls, c, exact: bool | None = None) -> Poly:
        return cls([c], exact)

    @classmethod
    def t(cls, exact: bool = True) -> Poly:
        return cls([0, 1], exact)

    @classmethod
    def from_roots(cls, roots: Iterable, exact: bool | None = None) -> Poly:
        out = cls([1], exact)
        for r in roots:
            out = out * cls([-r, 1], out.exact)
        return out

    # -- basic properties -------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        if not self.coeffs:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0) if self.exact else 0.0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, float)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.exact != self.exact:
                raise ModeError("cannot combine exact and float polynomials")
            return other
        if isinstance(other, bool):
            raise TypeError("bool is not a polynomial coefficient")
        if isinstance(other, int):
            return Poly._raw([Fraction(other) if self.exact else float(other)], self.exact)
        if isinstance(other, Fraction):
            if not self.exact:
                raise ModeError("rational scalar in float mode")
            return Poly._raw([other], True)
        if isinstance(other, float):
            if self.exact:
                raise ModeError("float scalar in exact mode")
            return Poly._raw([other], False)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Poly._raw(K.add(list(self.coeffs), list(o.coeffs)), self.exact)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw([-c for c in self.coeffs], self.exact)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Poly._raw(K.sub(list(self.coeffs), list(o.coeffs)), self.exact)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if len(o.coeffs) == 1:
            c = o.coeffs[0]
            return Poly._raw([a * c for a in self.coeffs], self.exact)
        return Poly._raw(K.mul(list(self.coeffs), list(o.coeffs)), self.exact)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        out = Poly._raw([1 if not self.exact else Fraction(1)], self.exact)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = K.divmod_(list(self.coeffs), list(o.coeffs))
        return Poly._raw(q, self.exact), Poly._raw(r, self.exact)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Exact division; raises if there is a nonzero remainder."""
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            o = self._lift(other)
            return self * (1 / o.coeffs[0] if o.coeffs else 1 / 0)
        q, r = divmod(self, other)
        if r and (self.exact or r.max_abs() > DEFAULT_TOL * max(1.0, self.max_abs())):
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def __call__(self, t):
        return K.evaluate(list(self.coeffs), t)

    # -- helpers ------------------------------------------------------------

    def derivative(self) -> Poly:
        return Poly._raw([k * c for k, c in enumerate(self.coeffs)][1:], self.exact)

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def max_abs(self) -> float:
        return float(max((abs(c) for c in self.coeffs), default=0))

    def to_float(self) -> Poly:
        return Poly._raw([float(c) for c in self.coeffs], False)

    def is_close(self, other: Poly, tol: float = DEFAULT_TOL) -> bool:
        """Coefficient-wise comparison relative to the larger max-coefficient."""
        scale = max(self.max_abs(), other.max_abs(), 1e-300)
        diff = Poly._raw(K.sub([float(c) for c in self.coeffs], [float(c) for c in other.coeffs]), False)
        return diff.max_abs() <= tol * scale

    def require_exact(self, what: str = "operation") -> None:
        if not self.exact:
            raise ModeError(f"{what} is only defined in exact mode")


def as_poly(obj, exact: bool | None = None) -> Poly:
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (list, tuple)):
        return Poly(obj, exact)
    return Poly([obj], exact)


# ---------------------------------------------------------------------------
# gcd and friends


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g`` monic and minimal-degree ``u, v``."""
    if a.is_zero and b.is_zero:
        raise PreconditionError("ext_gcd of two zero polynomials")
    one = Poly._raw([Fraction(1) if a.exact else 1.0], a.exact)
    zero = Poly.zero(a.exact)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def lcm(a: Poly, b: Poly) -> Poly:
    return (a * b // gcd(a, b)).monic()


def squarefree_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lc * prod(f**m)`` with monic, squarefree, coprime ``f``."""
    p.require_exact("squarefree decomposition")
    if p.is_zero:
        raise PreconditionError("squarefree decomposition of zero")
    p = p.monic()
    if p.degree < 1:
        return []
    dp = p.derivative()
    a0 = gcd(p, dp)
    b = p // a0
    c = dp // a0
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def is_squarefree(p: Poly) -> bool:
    return gcd(p, p.derivative()).degree < 1


# ---------------------------------------------------------------------------
# real roots


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while chain[-1]:
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _chain_at(chain: Sequence[Poly], x) -> list:
    if x is None or x == math.inf:
        return [q.lc for q in chain]
    if x == -math.inf:
        return [q.lc * (-1) ** q.degree for q in chain]
    return [q(x) for q in chain]


def sturm_real_root_count(p: Poly, lo=-math.inf, hi=math.inf, chain=None) -> int:
    """Number of distinct real roots of the squarefree ``p`` in ``(lo, hi]``."""
    p.require_exact("Sturm counting")
    if p.is_zero:
        raise PreconditionError("Sturm counting for the zero polynomial")
    if p.degree < 1:
        return 0
    if chain is None:
        if not is_squarefree(p):
            raise PreconditionError("Sturm counting needs a squarefree polynomial")
        chain = sturm_chain(p)
    return _sign_changes(_chain_at(chain, lo)) - _sign_changes(_chain_at(chain, hi))


def _root_bound(p: Poly) -> Fraction:
    lc = abs(p.lc)
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1]) if p.degree > 0 else Fraction(1)


def real_root_intervals(p: Poly, width=None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]``, each holding exactly one real root of
    the squarefree ``p``, ordered from left to right."""
    p.require_exact("real root isolation")
    chain = sturm_chain(p)
    b = _root_bound(p)
    pending = [(-b, b)]
    out = []
    while pending:
        lo, hi = pending.pop()
        n = sturm_real_root_count(p, lo, hi, chain)
        if n == 0:
            continue
        if n == 1 and (width is None or hi - lo <= width):
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        pending.append((mid, hi))
        pending.append((lo, mid))
    return sorted(out)


def rational_roots(p: Poly) -> list[Fraction]:
    """Rational roots of the squarefree ``p``, ascending."""
    p.require_exact("rational root search")
    if p.degree < 1:
        return []
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    lead = abs(ints[-1] // g)
    # a root r = m/q has q | lead, so lead*r is an integer; isolate finely
    # enough that each interval contains at most one such candidate
    out = []
    for lo, hi in real_root_intervals(p, width=Fraction(1, 2 * lead)):
        m = math.floor(hi * lead)
        cand = Fraction(m, lead)
        if lo < cand <= hi and p(cand) == 0:
            out.append(cand)
    return out


def poly_sqrt(p: Poly) -> Poly | None:
    """Exact square root with positive leading coefficient, or ``None``."""
    p.require_exact("poly_sqrt")
    if p.is_zero:
        raise PreconditionError("poly_sqrt of zero")
    n = p.degree
    if n % 2:
        return None
    lc = p.lc
    if lc < 0:
        return None
    rn, rd = math.isqrt(lc.numerator), math.isqrt(lc.denominator)
    if rn * rn != lc.numerator or rd * rd != lc.denominator:
        return None
    m = n // 2
    s = [Fraction(0)] * (m + 1)
    s[m] = Fraction(rn, rd)
    two_lead = 2 * s[m]
    for k in range(m - 1, -1, -1):
        acc = sum((s[i] * s[m + k - i] for i in range(k + 1, m)), Fraction(0))
        s[k] = (p.coeffs[m + k] - acc) / two_lead
    root = Poly._raw(s, True)
    return root if root * root == p else None


# ---------------------------------------------------------------------------
# text form


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(float(c))


def format_poly(p: Poly, var: str = "t") -> str:
    """Descending human-readable form, e.g. ``t^2-6t+10`` or ``-(1/10)t^4+6``."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        neg = c < 0
        a = -c if neg else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and a == 1:
            body = mono
        else:
            s = _fmt_coeff(a)
            if mono and ("/" in s or "e" in s):
                s = f"({s})"
            body = s + mono
        sign = "-" if neg else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts)


_TERM_SPLIT = re.compile(r"(?<![eE(])(?=[+-])")
_NUM = re.compile(r"^(\d+/\d+|\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)$")


def _parse_number(s: str):
    if not _NUM.match(s):
        raise ValueError(f"bad coefficient {s!r}")
    if "/" in s:
        return Fraction(s)
    if any(ch in s for ch in ".eE"):
        return float(s)
    return int(s)


def parse_poly(text: str, var: str = "t") -> Poly:
    """Inverse of :func:`format_poly`; also accepts ``*`` and spaces."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, object] = {}
    for term in _TERM_SPLIT.split(s):
        if not term:
            continue
        sign = -1 if term[0] == "-" else 1
        term = term.lstrip("+-")
        if var in term:
            cs, _, pw = term.partition(var)
            power = int(pw[1:]) if pw.startswith("^") else (1 if not pw else None)
            if power is None:
                raise ValueError(f"bad term {term!r}")
        else:
            cs, power = term, 0
        if cs.startswith("(") and cs.endswith(")"):
            cs = cs[1:-1]
            if cs and cs[0] in "+-":
                sign *= -1 if cs[0] == "-" else 1
                cs = cs[1:]
        c = _parse_number(cs) if cs else 1
        coeffs[power] = coeffs.get(power, 0) + sign * c
    deg = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(deg + 1)])
