"""Command-line interface: zd / gcircle / wasan / render subcommands."""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import List, Optional

from .zdarith import Angle, Mode, ZdScalar, exact, flt, zd_div, zd_tan
from .gcircle import GCircle, classify, radius, tangency
from .wasan import (
    FormIndex,
    build_configuration,
    degenerate_cases,
    gamma_radius,
    solve_c_bisection,
    sweep,
    verify_configuration,
)
from .render import FigureSpec, render_figure

_PI_RE = re.compile(r"^(-?\d+)(?:/(\d+))?\s*\*?\s*pi$")


def parse_scalar(text: str, exact_mode: bool) -> ZdScalar:
    """Parse a decimal or p/q rational literal into the requested mode."""
    value = Fraction(text)
    return exact(value) if exact_mode else flt(float(value))


def parse_pi_multiple(text: str) -> Angle:
    m = _PI_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(
            f"expected an angle like '1/2pi' or '3pi', got {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Angle(Fraction(num, den))


def parse_coeffs(text: str, exact_mode: bool) -> GCircle:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"expected four comma-separated coefficients, got {text!r}")
    q, g, f, c = (parse_scalar(p.strip(), exact_mode) for p in parts)
    return GCircle(q, g, f, c)


def format_scalar(v: ZdScalar) -> str:
    if v.mode is Mode.EXACT:
        return f"{float(v):.12g} (= {v.value})"
    return f"{float(v):.12g}"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--exact", action="store_true",
                        default=argparse.SUPPRESS,
                        help="use exact rational arithmetic")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="tolerance for checks (default 1e-9)")

    parser = argparse.ArgumentParser(
        prog="zdgeom",
        description="Generalized-circle geometry under total division (x/0 = 0).",
    )
    parser.add_argument("--exact", action="store_true")
    parser.add_argument("--tol", type=float, default=1e-9)
    top = parser.add_subparsers(dest="group", required=True)

    zd = top.add_parser("zd", help="total-division scalar operations")
    zd_sub = zd.add_subparsers(dest="op", required=True)
    p = zd_sub.add_parser("div", parents=[common])
    p.add_argument("n")
    p.add_argument("d")
    p = zd_sub.add_parser("tan", parents=[common])
    p.add_argument("angle", type=parse_pi_multiple,
                   help="rational multiple of pi, e.g. 1/2pi")

    gc = top.add_parser("gcircle", help="generalized circle operations")
    gc_sub = gc.add_subparsers(dest="op", required=True)
    p = gc_sub.add_parser("classify", parents=[common])
    p.add_argument("--coeffs", required=True)
    p = gc_sub.add_parser("radius", parents=[common])
    p.add_argument("--coeffs", required=True)
    p = gc_sub.add_parser("tangency", parents=[common])
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)

    ws = top.add_parser("wasan", help="tangent-circle configuration")
    ws_sub = ws.add_subparsers(dest="op", required=True)
    p = ws_sub.add_parser("verify", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = ws_sub.add_parser("degenerate", parents=[common])
    p.add_argument("--b", required=True)
    p.add_argument("--form", type=int, choices=(1, 2, 3))
    p = ws_sub.add_parser("sweep", parents=[common])
    p.add_argument("--b", required=True)
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out")
    p = ws_sub.add_parser("oracle", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    rd = top.add_parser("render", parents=[common],
                        help="emit one of the five figures as SVG")
    rd.add_argument("--figure", type=int, required=True, choices=(1, 2, 3, 4, 5))
    rd.add_argument("--a", type=float, default=1.0)
    rd.add_argument("--b", type=float, default=1.0)
    rd.add_argument("--out")
    rd.add_argument("--width", type=int, default=600)
    rd.add_argument("--height", type=int, default=450)
    return parser


def _cmd_zd(args) -> int:
    if args.op == "div":
        n = parse_scalar(args.n, args.exact)
        d = parse_scalar(args.d, args.exact)
        print(format_scalar(zd_div(n, d)))
    else:
        mode = Mode.EXACT if args.exact else Mode.FLOAT
        print(format_scalar(zd_tan(args.angle, mode)))
    return 0


def _cmd_gcircle(args) -> int:
    if args.op == "tangency":
        c1 = parse_coeffs(args.c1, args.exact)
        c2 = parse_coeffs(args.c2, args.exact)
        print(tangency(c1, c2, args.tol).value)
        return 0
    curve = parse_coeffs(args.coeffs, args.exact)
    if args.op == "classify":
        print(classify(curve).value)
    else:
        print(format_scalar(radius(curve)))
    return 0


def _print_curve(name: str, curve: GCircle) -> None:
    coeffs = ", ".join(str(v) for v in curve.coeffs)
    print(f"  {name}: ({coeffs})  {classify(curve).value}  "
          f"radius={format_scalar(radius(curve))}")


def _cmd_wasan(args) -> int:
    if args.op == "verify":
        a = parse_scalar(args.a, args.exact)
        b = parse_scalar(args.b, args.exact)
        cfg = build_configuration(a, b)
        report = verify_configuration(cfg, tol=args.tol)
        print(f"c = {format_scalar(cfg.c)}")
        for name, value in report.residuals().items():
            print(f"  {name}: {format_scalar(value)}")
        print(f"max |residual| = {format_scalar(report.max_abs)}"
              f"  ({'ok' if report.ok else 'FAIL'} at tol {args.tol})")
        return 0 if report.ok else 1
    if args.op == "degenerate":
        b = parse_scalar(args.b, args.exact)
        cases = degenerate_cases(b)
        form_of_case = {0: 3, 1: 1, 2: 2}  # list index -> form number
        for idx, (alpha, gamma, label) in enumerate(cases):
            if args.form is not None and form_of_case[idx] != args.form:
                continue
            print(f"[form {form_of_case[idx]}] {label}")
            _print_curve("alpha", alpha)
            _print_curve("gamma", gamma)
        return 0
    if args.op == "oracle":
        result = solve_c_bisection(float(Fraction(args.a)),
                                   float(Fraction(args.b)), args.tol)
        print(f"c = {result.root:.12g}  ({result.iterations} bisection steps)")
        return 0
    # sweep
    b = flt(Fraction(args.b))
    n = args.steps
    if n < 1:
        raise SystemExit("--steps must be >= 1")
    if n == 1:
        a_values = [args.a_min]
    else:
        step = (args.a_max - args.a_min) / (n - 1)
        a_values = [args.a_min + i * step for i in range(n)]
    rows = sweep(b, a_values)
    lines = ["a\tc_closed\tc_oracle\tmax_residual"]
    ok = True
    for row in rows:
        lines.append(f"{row.a:.12g}\t{row.c_closed_form:.12g}\t"
                     f"{row.c_oracle:.12g}\t{row.max_tangency_residual:.3e}")
        if (row.max_tangency_residual > args.tol
                or abs(row.c_closed_form - row.c_oracle) > args.tol):
            ok = False
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def _cmd_render(args) -> int:
    spec = FigureSpec(figure_id=args.figure, a=args.a, b=args.b,
                      width=args.width, height=args.height)
    svg = render_figure(spec)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.group == "zd":
        return _cmd_zd(args)
    if args.group == "gcircle":
        return _cmd_gcircle(args)
    if args.group == "wasan":
        return _cmd_wasan(args)
    return _cmd_render(args)


if __name__ == "__main__":
    sys.exit(main())
