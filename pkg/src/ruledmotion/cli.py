"""Command-line front end.

Every subcommand reads one JSON document and writes one JSON document. Exit
codes: 0 ok, 1 parse, 2 invalid geometry, 3 no solution, 4 verification
failure, 5 non-generic, 6 interpolation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .dual import minimality_check, solution_family, synthesize, verify_solution
from .errors import ModeError, ParseError, RuledMotionError, VerificationError
from .interpolation import interpolate_three_lines, ruled_surface_obj
from .lines import is_kinematic, saturation_analysis
from .motion import extract_right_factor_quadratic, factor_into_linear, peel_translation_factor
from .polynomial import parse_poly
from .serialization import (
    document_mode,
    dual_const_to_json,
    format_scalar,
    line_from_json,
    line_to_json,
    motion_from_json,
    motion_to_json,
    plucker_from_json,
    plucker_to_json,
    pretty,
    quat_const_to_json,
    quat_from_json,
)

EXIT_OK = 0


def _read(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _write(path: str, doc) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _check_mode(doc, args) -> str:
    mode = document_mode(doc) or args.mode or "exact"
    if args.mode and mode != args.mode:
        raise ModeError(f"document is in {mode} mode but --mode {args.mode} was requested")
    return mode


def _parse_poly_arg(text: str, exact: bool = True):
    try:
        p = parse_poly(text)
    except (ValueError, ArithmeticError) as exc:
        raise ParseError(f"cannot parse polynomial {text!r}") from exc
    return p if exact else p.to_float()


def cmd_analyze(args, doc) -> tuple[int, dict]:
    mode = _check_mode(doc, args)
    L = line_from_json(doc)
    out = {"mode": mode, "degree": L.degree}
    if mode == "float":
        ok, sigma = is_kinematic(L, args.tolerance)
        out.update(kinematic=ok, sigma=pretty(sigma) if ok else None, heuristic=True)
        return EXIT_OK, out
    ok, sigma = is_kinematic(L)
    if not ok:
        out.update(kinematic=False)
        return EXIT_OK, out
    report = saturation_analysis(L)
    out.update(
        kinematic=True,
        reduced=report.is_reduced,
        saturated=report.is_saturated,
        g=pretty(report.g),
        ell=pretty(report.ell),
        sigma=pretty(sigma),
    )
    return EXIT_OK, out


def _parse_unit(text: str):
    try:
        v0, v3 = (Fraction(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError("--unit expects 'v0,v3'") from exc
    return (v0, 0, 0, v3)


def cmd_synthesize(args, doc) -> tuple[int, dict]:
    _check_mode(doc, args)
    L = line_from_json(doc)
    inject = None
    if args.inject_q:
        qdoc = _read(args.inject_q)
        body = qdoc.get("q", qdoc) if isinstance(qdoc, dict) else qdoc
        inject = quat_from_json(body, "exact")
    res = synthesize(L, inject_q=inject, seed=args.seed)
    C = res.C
    if args.nu or args.unit:
        nu = _parse_poly_arg(args.nu) if args.nu else None
        unit = _parse_unit(args.unit) if args.unit else (1, 0, 0, 0)
        C = solution_family(res, nu, unit)
    minimal, unique = minimality_check(C, res.L_hat)
    out = motion_to_json(C)
    out.update(line_to_json(L))
    out.update(
        h=pretty(res.h),
        c=format_scalar(res.c),
        ell=pretty(res.ell),
        minimal=minimal,
        unique=unique,
        rotation=[format_scalar(x) for x in res.rotation_applied],
        family_translation_degree=res.family_translation_degree,
    )
    return EXIT_OK, out


def cmd_verify(args, doc) -> tuple[int, dict]:
    _check_mode(doc, args)
    C = motion_from_json(doc)
    ldoc = _read(args.line) if args.line else doc
    L = line_from_json(ldoc)
    try:
        h, c = verify_solution(C, L, args.tolerance)
    except VerificationError as exc:
        return exc.exit_code, {"ok": False, "residual": exc.residual, "message": str(exc)}
    return EXIT_OK, {"ok": True, "h": pretty(h), "c": format_scalar(c)}


def _factor_json(f) -> dict:
    return {"h": dual_const_to_json((f.primal, f.dual)), "norm": pretty(f.norm()), "axis": plucker_to_json(f.axis())}


def cmd_factor(args, doc) -> tuple[int, dict]:
    mode = _check_mode(doc, args)
    exact = mode == "exact"
    C = motion_from_json(doc)
    out = {}
    if args.peel_translation:
        try:
            text, m = args.peel_translation.rsplit(",", 1)
            m = int(m)
        except ValueError as exc:
            raise ParseError("--peel-translation expects 'POLY,m'") from exc
        rest, E = peel_translation_factor(C, _parse_poly_arg(text, exact), m)
        out["translation_factor"] = motion_to_json(E)["motion"]
        C = rest
    if args.order is not None:
        order = [_parse_poly_arg(s, exact) for s in args.order.split(";") if s.strip()]
        factors = []
        rest = C
        for f in reversed(order):
            rest, fac = extract_right_factor_quadratic(rest, f, args.tolerance)
            factors.insert(0, fac)
        if rest.degree == 0:
            out["leading"] = dual_const_to_json((rest.primal.coefficient(0), rest.dual.coefficient(0)))
        else:
            out["quotient"] = motion_to_json(rest)["motion"]
        out["factors"] = [_factor_json(f) for f in factors]
    elif not args.peel_translation:
        lead, factors = factor_into_linear(C, None, args.tolerance)
        out["leading"] = dual_const_to_json(lead)
        out["factors"] = [_factor_json(f) for f in factors]
    else:
        out["quotient"] = motion_to_json(C)["motion"]
    return EXIT_OK, out


def _floats(text: str):
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"expected comma-separated numbers, got {text!r}") from exc


def cmd_interpolate(args, doc) -> tuple[int, dict]:
    if not isinstance(doc, dict) or not isinstance(doc.get("lines"), list) or len(doc["lines"]) != 3:
        raise ParseError("expected {'lines': [three lines]}")
    if args.mode == "exact":
        raise ModeError("interpolation runs in float mode")
    lines = [plucker_from_json(x) for x in doc["lines"]]
    knots = _floats(args.knots) if args.knots else tuple(float(x) for x in doc.get("knots", (-1, 0, 1)))
    weights = _floats(args.weights) if args.weights else tuple(float(x) for x in doc.get("weights", (1, 1, 1)))
    phis = tuple(float(x) for x in doc.get("phis", (0, 0, 0)))
    res = interpolate_three_lines(
        *lines, knots=knots, weights=weights, phis=phis, fixed_frame=args.fixed_frame, tol=args.tolerance
    )
    if args.mesh:
        with open(args.mesh, "w", encoding="utf-8") as fh:
            fh.write(ruled_surface_obj(res.L, (knots[0], knots[-1]), args.samples, args.clip, res.axes))
    out = motion_to_json(res.C)
    out.update(
        preimages=[quat_const_to_json(p) for p in res.preimages],
        leading=dual_const_to_json(res.leading),
        factorization_a=[dual_const_to_json((f.primal, f.dual)) for f in res.factorization_a],
        factorization_b=[dual_const_to_json((f.primal, f.dual)) for f in res.factorization_b],
        axes=[plucker_to_json(a) for a in res.axes],
        residuals=res.residuals,
    )
    out.update(line_to_json(res.L))
    return EXIT_OK, out


COMMANDS = {
    "analyze": cmd_analyze,
    "synthesize": cmd_synthesize,
    "verify": cmd_verify,
    "factor": cmd_factor,
    "interpolate": cmd_interpolate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="input JSON file or - for stdin")
    common.add_argument("--output", default="-", help="output JSON file or - for stdout")
    common.add_argument("--mode", choices=("exact", "float"), default=None)
    common.add_argument("--tolerance", type=float, default=None, help="float tolerance (default 1e-9, 1e-8 for interpolate)")
    common.add_argument("--seed", type=int, default=0, help="seed for the rotation schedule tail")

    parser = argparse.ArgumentParser(prog="ruledmotion", description="Rational motions guiding a line along a ruled surface.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="kinematicity and saturation report")
    p = sub.add_parser("synthesize", parents=[common], help="minimal motion for a line polynomial")
    p.add_argument("--inject-q", default=None, help="JSON file with a primal solution {'q': {w,x,y,z}}")
    p.add_argument("--nu", default=None, help="translation polynomial for the solution family")
    p.add_argument("--unit", default=None, help="rotation v0,v3 about the moving line")
    p = sub.add_parser("verify", parents=[common], help="check a motion against a line polynomial")
    p.add_argument("--line", default=None, help="JSON file with the line (default: the input document)")
    p = sub.add_parser("factor", parents=[common], help="split off linear or translation factors")
    p.add_argument("--order", default=None, help="semicolon-separated quadratic norms, left to right")
    p.add_argument("--peel-translation", default=None, help="'POLY,m' to split off (f^m + eps e k)")
    p = sub.add_parser("interpolate", parents=[common], help="degree-two motion through three lines")
    p.add_argument("--knots", default=None)
    p.add_argument("--weights", default=None)
    p.add_argument("--mesh", default=None, help="write an OBJ mesh of the ruled surface and axes")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--clip", type=float, default=10.0, help="half edge of the clipping cube")
    p.add_argument("--fixed-frame", action="store_true", help="map the axes by the leading coefficient")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance is None:
        args.tolerance = 1e-8 if args.command == "interpolate" else 1e-9
    try:
        doc = _read(args.input)
        code, out = COMMANDS[args.command](args, doc)
    except RuledMotionError as exc:
        sys.stderr.write(f"ruledmotion: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    _write(args.output, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
