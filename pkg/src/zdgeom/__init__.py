"""Generalized-circle geometry under total division (x/0 = 0)."""

from .zdarith import (
    Angle,
    IrrationalError,
    Mode,
    ModeMismatchError,
    NegativeOperandError,
    NonFiniteError,
    ZdError,
    ZdScalar,
    exact,
    flt,
    one,
    zd_div,
    zd_sqrt,
    zd_tan,
    zero,
)
from .gcircle import (
    CurveKind,
    EmptyCurveError,
    GCircle,
    Point,
    TangencyKind,
    center,
    classify,
    eval_at,
    point_distance,
    radius,
    scale,
    tangency,
)
from .wasan import (
    FormIndex,
    NoBracketError,
    OracleResult,
    SweepRow,
    TangencyReport,
    WasanConfiguration,
    alpha_form,
    build_configuration,
    degenerate_cases,
    gamma_form,
    gamma_radius,
    horizontal_line,
    oracle_solve_c,
    solve_c_bisection,
    sweep,
    verify_configuration,
)
from .render import FigureSpec, Scene, Transform, build_scene, render_figure

__all__ = [
    "Angle", "IrrationalError", "Mode", "ModeMismatchError",
    "NegativeOperandError", "NonFiniteError", "ZdError", "ZdScalar",
    "exact", "flt", "one", "zd_div", "zd_sqrt", "zd_tan", "zero",
    "CurveKind", "EmptyCurveError", "GCircle", "Point", "TangencyKind",
    "center", "classify", "eval_at", "point_distance", "radius", "scale",
    "tangency",
    "FormIndex", "NoBracketError", "OracleResult", "SweepRow",
    "TangencyReport", "WasanConfiguration", "alpha_form",
    "build_configuration", "degenerate_cases", "gamma_form", "gamma_radius",
    "horizontal_line", "oracle_solve_c", "solve_c_bisection", "sweep",
    "verify_configuration",
    "FigureSpec", "Scene", "Transform", "build_scene", "render_figure",
]

__version__ = "0.1.0"
