"""Three tangent circles between parallel lines, with the singular case a = 0.

Circles alpha (radius a), beta (radius b), gamma (radius c) sit between the
parallel tangents s: y = 0 and t: y = 2b of beta, with alpha touching s and
beta externally and gamma touching t, alpha, and beta externally. The radii
satisfy the closed form c = b^2 / (4a), which under total division extends
to a = 0 where alpha and gamma degenerate to points and lines.

The closed form is independently verified by a bisection oracle on the
gamma-alpha tangency residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

from .zdarith import IrrationalError, Mode, ZdScalar, zd_div, zd_sqrt, zero
from .gcircle import GCircle, Point, point_distance


class NoBracketError(Exception):
    """Bisection could not bracket a sign change."""


class FormIndex(Enum):
    """Which of the three algebraic rearrangements of a circle equation."""

    FORM1 = 1
    FORM2 = 2
    FORM3 = 3


@dataclass(frozen=True)
class WasanConfiguration:
    """The five curves of the configuration in the canonical frame.

    Origin at the tangency point of beta and s; beta centered at (0, b),
    alpha at (2*sqrt(ab), a), gamma at (2*sqrt(bc), 2b - c).
    """

    a: ZdScalar
    b: ZdScalar
    c: ZdScalar
    alpha: GCircle
    beta: GCircle
    gamma: GCircle
    s: GCircle
    t: GCircle

    @property
    def mode(self) -> Mode:
        return self.a.mode


@dataclass(frozen=True)
class TangencyReport:
    """Signed residuals (achieved distance - required distance) for the five
    tangency conditions; all five are 0 iff the configuration is tangent."""

    alpha_s: ZdScalar
    alpha_beta: ZdScalar
    gamma_t: ZdScalar
    gamma_beta: ZdScalar
    gamma_alpha: ZdScalar
    max_abs: ZdScalar
    ok: bool

    def residuals(self) -> dict:
        return {
            "alpha_s": self.alpha_s,
            "alpha_beta": self.alpha_beta,
            "gamma_t": self.gamma_t,
            "gamma_beta": self.gamma_beta,
            "gamma_alpha": self.gamma_alpha,
        }


def gamma_radius(a: ZdScalar, b: ZdScalar) -> ZdScalar:
    """Closed form c = b^2 / (4a); total division gives c = 0 at a = 0."""
    if b <= 0:
        raise ValueError("b must be positive")
    if a < 0:
        raise ValueError("a must be nonnegative")
    return zd_div(b * b, a * 4)


def _half(mode: Mode) -> ZdScalar:
    return ZdScalar.of(Fraction(1, 2) if mode is Mode.EXACT else 0.5, mode)


def horizontal_line(y_value: ZdScalar) -> GCircle:
    """The line y = y0 as a GCircle, scaled so eval_at gives y - y0."""
    mode = y_value.mode
    return GCircle(zero(mode), zero(mode), _half(mode), -y_value)


def build_configuration(a: ZdScalar, b: ZdScalar) -> WasanConfiguration:
    """Construct the tangent configuration for strictly positive a and b.

    Exact mode needs sqrt(ab) and sqrt(bc) rational (e.g. the family
    a = b*k^2 with rational k), otherwise IrrationalError propagates.
    The singular value a = 0 is handled by degenerate_cases, not here.
    """
    if a <= 0 or b <= 0:
        raise ValueError("build_configuration requires a > 0 and b > 0")
    mode = a.mode
    one_ = ZdScalar.of(1, mode)
    c = gamma_radius(a, b)
    sqrt_ab = zd_sqrt(a * b)
    sqrt_bc = zd_sqrt(b * c)
    alpha = GCircle(one_, -sqrt_ab * 2, -a, a * b * 4)
    beta = GCircle(one_, zero(mode), -b, zero(mode))
    # (x - 2 sqrt(bc))^2 + (y - (2b - c))^2 = c^2 expands to constant term
    # (2b-c)^2 + 4bc - c^2 = 4b^2
    gamma = GCircle(one_, -sqrt_bc * 2, -(b * 2 - c), b * b * 4)
    s = horizontal_line(zero(mode))
    t = horizontal_line(b * 2)
    return WasanConfiguration(a=a, b=b, c=c, alpha=alpha, beta=beta,
                              gamma=gamma, s=s, t=t)


def verify_configuration(cfg: WasanConfiguration, tol=0.0) -> TangencyReport:
    """Residuals of the five tangency conditions; all zero if the closed
    form holds. Exact mode yields exact rational residuals on the
    a = b*k^2 family."""
    a, b, c = cfg.a, cfg.b, cfg.c
    mode = cfg.mode
    center_alpha = Point(zd_sqrt(a * b) * 2, a)
    center_beta = Point(zero(mode), b)
    center_gamma = Point(zd_sqrt(b * c) * 2, b * 2 - c)
    # s and t are horizontal, so point-line distance is a coordinate gap
    alpha_s = center_alpha.y - a
    gamma_t = (b * 2 - center_gamma.y) - c
    alpha_beta = point_distance(center_alpha, center_beta) - (a + b)
    gamma_beta = point_distance(center_gamma, center_beta) - (b + c)
    gamma_alpha = point_distance(center_gamma, center_alpha) - (a + c)
    residuals = [alpha_s, alpha_beta, gamma_t, gamma_beta, gamma_alpha]
    max_abs = max((abs(r) for r in residuals), key=lambda r: r.value)
    return TangencyReport(
        alpha_s=alpha_s,
        alpha_beta=alpha_beta,
        gamma_t=gamma_t,
        gamma_beta=gamma_beta,
        gamma_alpha=gamma_alpha,
        max_abs=max_abs,
        ok=max_abs.value <= tol,
    )


def _check_form_args(a: ZdScalar, b: ZdScalar) -> None:
    if b <= 0:
        raise ValueError("b must be positive")
    if a < 0:
        raise ValueError("a must be nonnegative")


def _to_float(x: ZdScalar) -> ZdScalar:
    return ZdScalar.of(float(x), Mode.FLOAT)


def alpha_form(k: FormIndex, a: ZdScalar, b: ZdScalar) -> GCircle:
    """Coefficients of the k-th rearrangement of alpha's equation, each
    coefficient evaluated independently under total division.

    For a > 0 the three forms share one zero set; at a = 0 they denote the
    point circle at the origin, the line x = 0, and the line y = 2b.
    When a coefficient involves an irrational square root, exact mode falls
    back to a float-mode quadruple (the denoted curve is unchanged).
    """
    _check_form_args(a, b)
    if a.mode is Mode.EXACT:
        try:
            return _alpha_form_raw(k, a, b)
        except IrrationalError:
            return _alpha_form_raw(k, _to_float(a), _to_float(b))
    return _alpha_form_raw(k, a, b)


def _alpha_form_raw(k: FormIndex, a: ZdScalar, b: ZdScalar) -> GCircle:
    mode = a.mode
    one_ = ZdScalar.of(1, mode)
    if k is FormIndex.FORM1:
        # (x - 2 sqrt(ab))^2 + (y - a)^2 - a^2 = 0
        return GCircle(one_, -zd_sqrt(a * b) * 2, -a, a * b * 4)
    if k is FormIndex.FORM2:
        # (x^2 + y^2)/sqrt(a) - 4x sqrt(b) - 2 sqrt(a) (y - 2b) = 0
        sqrt_a = zd_sqrt(a)
        return GCircle(zd_div(one_, sqrt_a), -zd_sqrt(b) * 2, -sqrt_a,
                       b * sqrt_a * 4)
    # (x^2 + y^2)/a - 4x sqrt(b/a) - 2(y - 2b) = 0
    return GCircle(zd_div(one_, a), -zd_sqrt(zd_div(b, a)) * 2, -one_, b * 4)


def gamma_form(k: FormIndex, a: ZdScalar, b: ZdScalar) -> GCircle:
    """Coefficients of the k-th rearrangement of gamma's equation with
    c = b^2/(4a) substituted, evaluated under total division.

    At a = 0 the three forms denote the line y = 0, the line x = 0, and the
    point circle at (0, 2b). Exact mode falls back to float coefficients
    when a square root is irrational, as for alpha_form.
    """
    _check_form_args(a, b)
    if a.mode is Mode.EXACT:
        try:
            return _gamma_form_raw(k, a, b)
        except IrrationalError:
            return _gamma_form_raw(k, _to_float(a), _to_float(b))
    return _gamma_form_raw(k, a, b)


def _gamma_form_raw(k: FormIndex, a: ZdScalar, b: ZdScalar) -> GCircle:
    mode = a.mode
    one_ = ZdScalar.of(1, mode)
    quarter = zd_div(one_, ZdScalar.of(4, mode))
    if k is FormIndex.FORM1:
        # a(x^2 + (y-2b)^2) - 2bx sqrt(ab) + b^2 y / 2 = 0
        return GCircle(a, -b * zd_sqrt(a * b),
                       -(a * b * 2 - b * b * quarter), a * b * b * 4)
    if k is FormIndex.FORM2:
        # sqrt(a)(x^2 + (y-2b)^2) - 2bx sqrt(b) + b^2 y / (2 sqrt(a)) = 0
        sqrt_a = zd_sqrt(a)
        return GCircle(sqrt_a, -b * zd_sqrt(b),
                       -(b * sqrt_a * 2 - zd_div(b * b, sqrt_a * 4)),
                       b * b * sqrt_a * 4)
    # x^2 + (y-2b)^2 - 2bx sqrt(b/a) + b^2 y / (2a) = 0
    return GCircle(one_, -b * zd_sqrt(zd_div(b, a)),
                   -(b * 2 - zd_div(b * b, a * 4)), b * b * 4)


# (form, figure label, alpha description, gamma description) for a = 0
_DEGENERATE_TABLE = (
    (FormIndex.FORM3, "figure-3",
     "alpha: line y = 2b (the tangent t)", "gamma: point circle at (0, 2b)"),
    (FormIndex.FORM1, "figure-4",
     "alpha: point circle at the origin", "gamma: line y = 0 (the tangent s)"),
    (FormIndex.FORM2, "figure-5",
     "alpha: line x = 0 (the y-axis)", "gamma: line x = 0 (the y-axis)"),
)


def degenerate_cases(b: ZdScalar) -> List[Tuple[GCircle, GCircle, str]]:
    """The three paired degenerate outcomes at a = 0.

    Same-index forms of alpha and gamma pair up: (line t, point (0,2b)),
    (point at origin, line s), and (y-axis, y-axis). Every returned curve
    has radius exactly 0.
    """
    if b <= 0:
        raise ValueError("b must be positive")
    a0 = zero(b.mode)
    return [
        (alpha_form(form, a0, b), gamma_form(form, a0, b),
         f"{label}: {alpha_desc}; {gamma_desc}")
        for form, label, alpha_desc, gamma_desc in _DEGENERATE_TABLE
    ]


@dataclass(frozen=True)
class OracleResult:
    root: float
    iterations: int


def _gamma_alpha_residual(c: float, a: float, b: float) -> float:
    # gamma tangent to t and beta is built into its center (2 sqrt(bc), 2b-c);
    # the remaining condition is external tangency to alpha
    dx = 2.0 * math.sqrt(a * b) - 2.0 * math.sqrt(b * c)
    dy = a - (2.0 * b - c)
    return math.hypot(dx, dy) - (a + c)


def solve_c_bisection(a: float, b: float, tol: float) -> OracleResult:
    """Bisection root of the gamma-alpha tangency residual R(c).

    Bracket starts at [1e-12 b, 1e6 b max(1, 1/a)] and the upper end doubles
    until R changes sign (at most 200 doublings, else NoBracketError).
    Iterates until the interval width is <= tol * max(1, c).
    """
    if a <= 0 or b <= 0:
        raise ValueError("oracle requires a > 0 and b > 0")
    lo = 1e-12 * b
    hi = 1e6 * b * max(1.0, 1.0 / a)
    r_lo = _gamma_alpha_residual(lo, a, b)
    r_hi = _gamma_alpha_residual(hi, a, b)
    doublings = 0
    while r_lo * r_hi > 0:
        if doublings >= 200:
            raise NoBracketError(
                f"no sign change for a={a}, b={b} after {doublings} doublings")
        hi *= 2.0
        r_hi = _gamma_alpha_residual(hi, a, b)
        doublings += 1
    iterations = 0
    while hi - lo > tol * max(1.0, 0.5 * (lo + hi)):
        mid = 0.5 * (lo + hi)
        r_mid = _gamma_alpha_residual(mid, a, b)
        if r_lo * r_mid <= 0:
            hi = mid
        else:
            lo, r_lo = mid, r_mid
        iterations += 1
        if iterations > 20000:  # pragma: no cover - safety net
            raise NoBracketError("bisection failed to converge")
    return OracleResult(root=0.5 * (lo + hi), iterations=iterations)


def oracle_solve_c(a: ZdScalar, b: ZdScalar, tol) -> ZdScalar:
    """Independent check of c = b^2/(4a): root of the tangency residual."""
    result = solve_c_bisection(float(a), float(b), float(tol))
    return ZdScalar.of(result.root, Mode.FLOAT)


@dataclass(frozen=True)
class SweepRow:
    a: float
    c_closed_form: float
    c_oracle: float
    max_tangency_residual: float


def sweep(b: ZdScalar, a_values: Sequence[float]) -> List[SweepRow]:
    """Closed form vs oracle vs tangency residual for each a, in input order."""
    if b <= 0:
        raise ValueError("b must be positive")
    rows = []
    for a_raw in a_values:
        a = ZdScalar.of(float(a_raw), Mode.FLOAT)
        bf = ZdScalar.of(float(b), Mode.FLOAT)
        c_closed = gamma_radius(a, bf)
        c_oracle = oracle_solve_c(a, bf, 1e-12)
        report = verify_configuration(build_configuration(a, bf))
        rows.append(SweepRow(
            a=float(a),
            c_closed_form=float(c_closed),
            c_oracle=float(c_oracle),
            max_tangency_residual=float(report.max_abs),
        ))
    return rows
