"""SVG rendering of the five configuration figures.

Figures 1 and 2 draw the full tangent configuration (figure 2 adds axes and
center labels); figures 3, 4, 5 draw the three degenerate pairings at a = 0.
Output is deterministic: a given FigureSpec always yields byte-identical SVG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Tuple

from .zdarith import Mode, ZdScalar
from .gcircle import CurveKind, GCircle, classify, center, radius
from .wasan import build_configuration, degenerate_cases

POINT_DOT_PX = 3.0  # screen radius for radius-0 point circles
LINE_OVERSHOOT = 0.10  # lines extend 10% beyond the data bounding box

_FIGURE_CASE = {3: 0, 4: 1, 5: 2}  # figure id -> index into degenerate_cases


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    a: float = 1.0
    b: float = 1.0
    width: int = 600
    height: int = 450
    margin: float = 30.0

    def __post_init__(self):
        if self.figure_id not in (1, 2, 3, 4, 5):
            raise ValueError("figure_id must be in 1..5")
        if self.b <= 0:
            raise ValueError("b must be positive")
        if self.figure_id in (1, 2) and self.a <= 0:
            raise ValueError("figures 1 and 2 require a > 0")
        if self.width <= 2 * self.margin or self.height <= 2 * self.margin:
            raise ValueError("canvas too small for the margin")


@dataclass(frozen=True)
class Transform:
    """Uniform world-to-screen map with the y-axis flipped (+y is up)."""

    scale: float
    min_x: float
    min_y: float
    offset_x: float
    offset_y: float
    height: float

    def to_screen(self, x: float, y: float) -> Tuple[float, float]:
        sx = self.offset_x + (x - self.min_x) * self.scale
        sy = self.height - (self.offset_y + (y - self.min_y) * self.scale)
        return sx, sy


@dataclass
class Scene:
    """World-space drawables plus the fitted transform."""

    spec: FigureSpec
    transform: Transform
    circles: List[Tuple[str, float, float, float]] = field(default_factory=list)
    dots: List[Tuple[str, float, float]] = field(default_factory=list)
    hlines: List[Tuple[str, float]] = field(default_factory=list)
    vlines: List[Tuple[str, float]] = field(default_factory=list)
    labels: List[Tuple[str, float, float]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    bbox: Tuple[float, float, float, float] = (0.0, 0.0, 1.0, 1.0)


def _fit_transform(spec: FigureSpec, bbox) -> Transform:
    min_x, min_y, max_x, max_y = bbox
    bw = max(max_x - min_x, 1e-9)
    bh = max(max_y - min_y, 1e-9)
    s = min((spec.width - 2 * spec.margin) / bw,
            (spec.height - 2 * spec.margin) / bh)
    return Transform(
        scale=s,
        min_x=min_x,
        min_y=min_y,
        offset_x=(spec.width - bw * s) / 2.0,
        offset_y=(spec.height - bh * s) / 2.0,
        height=float(spec.height),
    )


def _line_y(curve: GCircle) -> float:
    # horizontal line 2fy + c = 0
    return -float(curve.c) / (2.0 * float(curve.f))


def _line_x(curve: GCircle) -> float:
    return -float(curve.c) / (2.0 * float(curve.g))


def _add_degenerate(scene_items, curve: GCircle, name: str):
    """Sort a degenerate curve into dots / hlines / vlines, deduplicating
    coincident lines; returns a note when the curve repeats an earlier one."""
    dots, hlines, vlines = scene_items
    kind = classify(curve)
    if kind is CurveKind.POINT_CIRCLE:
        p = center(curve)
        dots.append((name, float(p.x), float(p.y)))
        return None
    if kind is not CurveKind.LINE:
        raise ValueError(f"unexpected degenerate kind {kind} for {name}")
    if float(curve.g) != 0.0 and float(curve.f) == 0.0:
        x0 = _line_x(curve)
        for prev_name, prev_x in vlines:
            if math.isclose(prev_x, x0, abs_tol=1e-12):
                return f"{name} coincides with {prev_name}"
        vlines.append((name, x0))
    elif float(curve.f) != 0.0 and float(curve.g) == 0.0:
        y0 = _line_y(curve)
        for prev_name, prev_y in hlines:
            if math.isclose(prev_y, y0, abs_tol=1e-12):
                return f"{name} coincides with {prev_name}"
        hlines.append((name, y0))
    else:  # pragma: no cover - degenerate cases only yield axis-parallel lines
        raise ValueError(f"oblique line not supported for {name}")
    return None


def build_scene(spec: FigureSpec) -> Scene:
    """Compute all drawables and the fitted world-to-screen transform."""
    b = spec.b
    circles: List[Tuple[str, float, float, float]] = []
    dots: List[Tuple[str, float, float]] = []
    hlines: List[Tuple[str, float]] = [("s", 0.0), ("t", 2.0 * b)]
    vlines: List[Tuple[str, float]] = []
    labels: List[Tuple[str, float, float]] = []
    notes: List[str] = []

    if spec.figure_id in (1, 2):
        cfg = build_configuration(
            ZdScalar.of(spec.a, Mode.FLOAT), ZdScalar.of(b, Mode.FLOAT))
        for name, curve in (("alpha", cfg.alpha), ("beta", cfg.beta),
                            ("gamma", cfg.gamma)):
            p = center(curve)
            circles.append((name, float(p.x), float(p.y), float(radius(curve))))
        if spec.figure_id == 2:
            vlines.append(("y-axis", 0.0))
            notes.append("x-axis coincides with s")
            for name, cx, cy, _ in circles:
                labels.append((f"{name} ({cx:.3f}, {cy:.3f})", cx, cy))
    else:
        beta = GCircle.of(1.0, 0.0, -b, 0.0, Mode.FLOAT)
        p = center(beta)
        circles.append(("beta", float(p.x), float(p.y), float(radius(beta))))
        alpha, gamma, label = degenerate_cases(
            ZdScalar.of(b, Mode.FLOAT))[_FIGURE_CASE[spec.figure_id]]
        notes.append(label)
        for curve, name in ((alpha, "alpha"), (gamma, "gamma")):
            note = _add_degenerate((dots, hlines, vlines), curve, name)
            if note:
                notes.append(note)
        if spec.figure_id == 5:
            # alpha and gamma collapse to one vertical line; flag the sharing
            vlines = [("alpha = gamma (shared y-axis)", vlines[0][1])] \
                if len(vlines) == 1 else vlines
    if dots:
        notes.append("point circle (radius 0) drawn as a fixed-size dot")

    xs, ys = [0.0], [0.0, 2.0 * b]
    for _, cx, cy, r in circles:
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    for _, x, y in dots:
        xs.append(x)
        ys.append(y)
    for _, x in vlines:
        xs.append(x)
    bbox = (min(xs), min(ys), max(xs), max(ys))
    scene = Scene(spec=spec, transform=_fit_transform(spec, bbox),
                  circles=circles, dots=dots, hlines=hlines, vlines=vlines,
                  labels=labels, notes=notes, bbox=bbox)
    return scene


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def scene_to_svg(scene: Scene) -> str:
    spec, tf = scene.spec, scene.transform
    min_x, min_y, max_x, max_y = scene.bbox
    over_x = (max_x - min_x) * LINE_OVERSHOOT
    over_y = (max_y - min_y) * LINE_OVERSHOOT
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" '
        'fill="white"/>',
    ]
    for name, y0 in scene.hlines:
        x1, sy = tf.to_screen(min_x - over_x, y0)
        x2, _ = tf.to_screen(max_x + over_x, y0)
        parts.append(
            f'<line class="hline" data-name="{name}" x1="{_fmt(x1)}" '
            f'y1="{_fmt(sy)}" x2="{_fmt(x2)}" y2="{_fmt(sy)}" '
            'stroke="black" stroke-width="1"/>')
    for name, x0 in scene.vlines:
        sx, y1 = tf.to_screen(x0, min_y - over_y)
        _, y2 = tf.to_screen(x0, max_y + over_y)
        parts.append(
            f'<line class="vline" data-name="{name}" x1="{_fmt(sx)}" '
            f'y1="{_fmt(y1)}" x2="{_fmt(sx)}" y2="{_fmt(y2)}" '
            'stroke="black" stroke-width="1"/>')
    for name, cx, cy, r in scene.circles:
        sx, sy = tf.to_screen(cx, cy)
        parts.append(
            f'<circle class="circle" data-name="{name}" cx="{_fmt(sx)}" '
            f'cy="{_fmt(sy)}" r="{_fmt(r * tf.scale)}" fill="none" '
            'stroke="black" stroke-width="1.5"/>')
    for name, x, y in scene.dots:
        sx, sy = tf.to_screen(x, y)
        parts.append(
            f'<circle class="point-circle" data-name="{name}" '
            f'cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="{POINT_DOT_PX:.1f}" '
            'fill="black"/>')
    for text, x, y in scene.labels:
        sx, sy = tf.to_screen(x, y)
        parts.append(
            f'<text class="center-label" x="{_fmt(sx + 4)}" '
            f'y="{_fmt(sy - 4)}" font-size="11">{text}</text>')
    for i, note in enumerate(scene.notes):
        parts.append(
            f'<text class="note" x="6" y="{14 + 14 * i}" '
            f'font-size="11">{note}</text>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"


def render_figure(spec: FigureSpec) -> str:
    """Render one figure to an SVG document string."""
    return scene_to_svg(build_scene(spec))
