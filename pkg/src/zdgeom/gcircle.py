"""Generalized circles: coefficient quadruples q(x^2+y^2) + 2gx + 2fy + c = 0.

One representation covers proper circles (q != 0, positive discriminant),
point circles (zero discriminant), and lines (q = 0). Radius and center are
defined for every kind through total division: a line has radius
sqrt((g^2+f^2)/0) = sqrt(0) = 0 and center (-g/0, -f/0) = (0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

from .zdarith import (
    Mode,
    ZdScalar,
    IrrationalError,
    zd_div,
    zd_sqrt,
    zero,
)

# absolute discriminant tolerance in float mode, scaled by max(1, g^2+f^2)
CLASSIFY_TOL = 1e-12


class EmptyCurveError(Exception):
    """Operation needing a nonempty curve got an empty one."""


class CurveKind(Enum):
    PROPER_CIRCLE = "ProperCircle"
    POINT_CIRCLE = "PointCircle"
    LINE = "Line"
    EMPTY_CURVE = "EmptyCurve"


class TangencyKind(Enum):
    EXTERNAL_TANGENT = "ExternalTangent"
    INTERNAL_TANGENT = "InternalTangent"
    LINE_TANGENT = "LineTangent"
    NOT_TANGENT = "NotTangent"


@dataclass(frozen=True)
class Point:
    x: ZdScalar
    y: ZdScalar

    def __post_init__(self):
        if self.x.mode is not self.y.mode:
            raise ValueError("point coordinates must share one mode")

    @property
    def mode(self) -> Mode:
        return self.x.mode

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True)
class GCircle:
    """Coefficients (q, g, f, c) of q(x^2+y^2) + 2gx + 2fy + c = 0."""

    q: ZdScalar
    g: ZdScalar
    f: ZdScalar
    c: ZdScalar

    def __post_init__(self):
        modes = {self.q.mode, self.g.mode, self.f.mode, self.c.mode}
        if len(modes) != 1:
            raise ValueError("all four coefficients must share one mode")
        if self.q.is_zero and self.g.is_zero and self.f.is_zero and self.c.is_zero:
            raise ValueError("the zero quadruple is not a generalized circle")

    @property
    def mode(self) -> Mode:
        return self.q.mode

    @property
    def coeffs(self) -> Tuple[ZdScalar, ZdScalar, ZdScalar, ZdScalar]:
        return (self.q, self.g, self.f, self.c)

    def discriminant(self) -> ZdScalar:
        return self.g * self.g + self.f * self.f - self.q * self.c

    @staticmethod
    def of(q, g, f, c, mode: Mode) -> "GCircle":
        return GCircle(
            ZdScalar.of(q, mode),
            ZdScalar.of(g, mode),
            ZdScalar.of(f, mode),
            ZdScalar.of(c, mode),
        )


def classify(curve: GCircle) -> CurveKind:
    """Kind of curve the quadruple denotes.

    Exact mode uses strict comparisons; float mode compares the discriminant
    to zero with absolute tolerance CLASSIFY_TOL * max(1, g^2 + f^2).
    """
    q, g, f, c = curve.coeffs
    if q.is_zero:
        if g.is_zero and f.is_zero:
            return CurveKind.EMPTY_CURVE
        return CurveKind.LINE
    disc = curve.discriminant()
    if curve.mode is Mode.EXACT:
        if disc > 0:
            return CurveKind.PROPER_CIRCLE
        if disc.is_zero:
            return CurveKind.POINT_CIRCLE
        return CurveKind.EMPTY_CURVE
    scale_ref = max(1.0, float(g * g + f * f))
    tol = CLASSIFY_TOL * scale_ref
    d = float(disc)
    if d > tol:
        return CurveKind.PROPER_CIRCLE
    if d >= -tol:
        return CurveKind.POINT_CIRCLE
    return CurveKind.EMPTY_CURVE


def radius(curve: GCircle) -> ZdScalar:
    """Radius sqrt((g^2+f^2-qc)/q^2); exactly 0 for any line, by q^2 = 0."""
    kind = classify(curve)
    if kind is CurveKind.EMPTY_CURVE:
        raise EmptyCurveError("empty curve has no radius")
    disc = curve.discriminant()
    if kind is CurveKind.LINE:
        return zero(curve.mode)
    if curve.mode is Mode.FLOAT and float(disc) < 0.0:
        # classification already called it a point circle; clamp float fuzz
        disc = zero(curve.mode)
    return zd_sqrt(zd_div(disc, curve.q * curve.q))


def center(curve: GCircle) -> Point:
    """Center (-g/q, -f/q); for a line, total division gives (0, 0)."""
    if classify(curve) is CurveKind.EMPTY_CURVE:
        raise EmptyCurveError("empty curve has no center")
    return Point(zd_div(-curve.g, curve.q), zd_div(-curve.f, curve.q))


def eval_at(curve: GCircle, p: Point) -> ZdScalar:
    """q(x^2+y^2) + 2gx + 2fy + c at p; zero iff p lies on the curve."""
    x, y = p.x, p.y
    return curve.q * (x * x + y * y) + curve.g * x * 2 + curve.f * y * 2 + curve.c


def scale(curve: GCircle, lam: ZdScalar) -> GCircle:
    """Multiply all four coefficients by a nonzero scalar; the zero set,
    classification, radius, and center are unchanged."""
    lam = ZdScalar.of(lam, curve.mode)
    if lam.is_zero:
        raise ValueError("scale factor must be nonzero")
    return GCircle(curve.q * lam, curve.g * lam, curve.f * lam, curve.c * lam)


Raw = Union[Fraction, float]


def _raw_sqrt(x: Raw) -> Raw:
    """Square root that keeps rationals exact when possible, else floats."""
    if isinstance(x, Fraction):
        num, den = x.numerator, x.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return math.sqrt(num / den)
    return math.sqrt(x)


def _line_point_distance(line: GCircle, p: Point) -> Raw:
    # line 2gx + 2fy + c = 0; distance = |2g x0 + 2f y0 + c| / (2 sqrt(g^2+f^2))
    g, f, c = line.g.value, line.f.value, line.c.value
    num = abs(2 * g * p.x.value + 2 * f * p.y.value + c)
    return num / (2 * _raw_sqrt(g * g + f * f))


def point_distance(p1: Point, p2: Point) -> ZdScalar:
    """Euclidean distance; exact mode requires the squared distance to be a
    rational square (IrrationalError otherwise)."""
    dx = p1.x - p2.x
    dy = p1.y - p2.y
    return zd_sqrt(dx * dx + dy * dy)


def tangency(c1: GCircle, c2: GCircle, tol) -> TangencyKind:
    """Tangency classification with tolerance in length units.

    Circle-circle: external iff |d - (r1+r2)| <= tol; internal iff r1 != r2
    and |d - |r1-r2|| <= tol. Line-circle: tangent iff the perpendicular
    distance from the center to the line is within tol of the radius.
    Line-line: never tangent. Point circles participate with radius 0, so a
    point is tangent to a curve iff it lies on it within tol.
    """
    k1, k2 = classify(c1), classify(c2)
    if CurveKind.EMPTY_CURVE in (k1, k2):
        raise EmptyCurveError("tangency of an empty curve is undefined")
    tol = float(tol) if not isinstance(tol, (int, float, Fraction)) else tol
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if k1 is CurveKind.LINE and k2 is CurveKind.LINE:
        return TangencyKind.NOT_TANGENT
    if k1 is CurveKind.LINE or k2 is CurveKind.LINE:
        line, circ = (c1, c2) if k1 is CurveKind.LINE else (c2, c1)
        d = _line_point_distance(line, center(circ))
        if abs(d - radius(circ).value) <= tol:
            return TangencyKind.LINE_TANGENT
        return TangencyKind.NOT_TANGENT
    p1, p2 = center(c1), center(c2)
    dx = p1.x.value - p2.x.value
    dy = p1.y.value - p2.y.value
    d = _raw_sqrt(dx * dx + dy * dy)
    r1, r2 = radius(c1).value, radius(c2).value
    if abs(d - (r1 + r2)) <= tol:
        return TangencyKind.EXTERNAL_TANGENT
    if r1 != r2 and abs(d - abs(r1 - r2)) <= tol:
        return TangencyKind.INTERNAL_TANGENT
    return TangencyKind.NOT_TANGENT
