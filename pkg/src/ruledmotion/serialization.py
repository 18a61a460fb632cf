"""JSON wire format.

Polynomials are objects ``{"coeffs": [...], "mode": "exact" | "float"}`` with
ascending coefficient strings: ``"p/q"`` (or an integer) in exact mode and a
shortest round-trip decimal in float mode.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ModeError, ParseError
from .lines import LinePoly, PluckerLine, validate_line_poly
from .polynomial import Poly, format_poly
from .quaternion import DualQuatPoly, MotionPoly, QuatPoly


def format_scalar(c) -> str:
    if isinstance(c, float):
        return repr(float(c))
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_scalar(s, mode: str):
    if not isinstance(s, str):
        raise ParseError(f"coefficients must be strings, got {s!r}")
    try:
        if mode == "exact":
            if any(ch in s for ch in ".eE") or "inf" in s.lower() or "nan" in s.lower():
                raise ParseError(f"decimal literal {s!r} in an exact document")
            return Fraction(s)
        if mode == "float":
            return float(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coefficient {s!r}") from exc
    raise ParseError(f"unknown mode {mode!r}")


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [format_scalar(c) for c in p.coeffs], "mode": "exact" if p.exact else "float"}


def poly_from_json(obj, mode: str | None = None) -> Poly:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ParseError("a polynomial must be an object with a 'coeffs' array")
    m = obj.get("mode", mode or "exact")
    if mode is not None and m != mode:
        raise ModeError("mixed scalar modes in one document")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list):
        raise ParseError("'coeffs' must be an array")
    return Poly([parse_scalar(c, m) for c in coeffs], exact=m == "exact")


def document_mode(obj) -> str:
    """The mode of the first polynomial found in a document."""
    if isinstance(obj, dict):
        if "coeffs" in obj:
            return obj.get("mode", "exact")
        for v in obj.values():
            m = document_mode(v)
            if m:
                return m
    if isinstance(obj, list):
        for v in obj:
            m = document_mode(v)
            if m:
                return m
    return ""


def quat_to_json(q: QuatPoly, names="wxyz") -> dict:
    return {n: poly_to_json(p) for n, p in zip("wxyz", q.comps) if n in names}


def quat_from_json(obj, mode: str, names="wxyz") -> QuatPoly:
    if not isinstance(obj, dict):
        raise ParseError("a quaternion polynomial must be an object")
    unknown = set(obj) - set(names)
    if unknown:
        raise ParseError(f"unexpected components {sorted(unknown)}")
    zero = Poly.zero(mode == "exact")
    parts = [poly_from_json(obj[n], mode) if n in obj else zero for n in "wxyz"]
    return QuatPoly(*parts, exact=mode == "exact")


def line_to_json(L: DualQuatPoly) -> dict:
    return {"line": {"primal": quat_to_json(L.primal, "xyz"), "dual": quat_to_json(L.dual, "xyz")}}


def line_from_json(doc) -> LinePoly:
    body = doc.get("line") if isinstance(doc, dict) else None
    if not isinstance(body, dict) or "primal" not in body or "dual" not in body:
        raise ParseError("expected {'line': {'primal': ..., 'dual': ...}}")
    mode = document_mode(doc) or "exact"
    return validate_line_poly(quat_from_json(body["primal"], mode, "xyz"), quat_from_json(body["dual"], mode, "xyz"))


def motion_to_json(C: DualQuatPoly) -> dict:
    return {"motion": {"primal": quat_to_json(C.primal), "dual": quat_to_json(C.dual)}}


def motion_from_json(doc) -> MotionPoly:
    body = doc.get("motion") if isinstance(doc, dict) else None
    if not isinstance(body, dict) or "primal" not in body or "dual" not in body:
        raise ParseError("expected {'motion': {'primal': ..., 'dual': ...}}")
    mode = document_mode(doc) or "exact"
    return MotionPoly(quat_from_json(body["primal"], mode), quat_from_json(body["dual"], mode))


def quat_const_to_json(q) -> list[str]:
    return [format_scalar(c) for c in q]


def dual_const_to_json(a) -> dict:
    return {"primal": quat_const_to_json(a[0]), "dual": quat_const_to_json(a[1])}


def plucker_to_json(line: PluckerLine) -> dict:
    return {"direction": [format_scalar(c) for c in line.direction], "moment": [format_scalar(c) for c in line.moment]}


def plucker_from_json(obj, tol: float = 1e-6) -> PluckerLine:
    if not isinstance(obj, dict) or "direction" not in obj or "moment" not in obj:
        raise ParseError("a line must have 'direction' and 'moment'")
    mode = obj.get("mode", "float")
    return PluckerLine(
        tuple(parse_scalar(c, mode) for c in obj["direction"]),
        tuple(parse_scalar(c, mode) for c in obj["moment"]),
        tol=tol,
    )


def pretty(p: Poly) -> str:
    return format_poly(p)
