"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines alongside the pytest verdicts.
"""

import math
import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from zdgeom.zdarith import Mode, ZdScalar, exact, flt, zd_div
from zdgeom.gcircle import CurveKind, GCircle, center, classify, radius
from zdgeom.wasan import (
    FormIndex,
    alpha_form,
    build_configuration,
    gamma_form,
    gamma_radius,
    oracle_solve_c,
    verify_configuration,
)
from zdgeom.render import FigureSpec, render_figure

FORMS = (FormIndex.FORM1, FormIndex.FORM2, FormIndex.FORM3)


def report(n, message):
    print(f"ACCEPTANCE {n} PASS: {message}")


def test_criterion_1_division_by_zero_law():
    rng = random.Random(20260826)
    pool = [exact(Fraction(rng.randint(-50, 50), rng.randint(1, 50)))
            for _ in range(256)]
    zero_ = exact(0)
    start = time.perf_counter()
    trials = 100_000
    for i in range(trials):
        tup = [pool[rng.randrange(256)] for _ in range(4)]
        tup[i % 4] = zero_
        a, b, c, d = tup
        assert (zd_div(a, b) * zd_div(c, d)).value == \
            zd_div(a * c, b * d).value
    for _ in range(1000):
        a = pool[rng.randrange(256)]
        assert zd_div(a, zero_).value == 0
    elapsed = time.perf_counter() - start
    assert elapsed < 2.0, f"took {elapsed:.2f}s"
    report(1, f"F-law exact on {trials} tuples and a/0=0 on 1000 scalars "
              f"in {elapsed:.2f}s")


def test_criterion_2_line_radius_rule():
    rng = random.Random(7)
    for _ in range(1000):
        g = Fraction(rng.randint(-30, 30), rng.randint(1, 20))
        f = Fraction(rng.randint(-30, 30), rng.randint(1, 20))
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 20))
        if g == 0 and f == 0:
            g = Fraction(1)
        line_e = GCircle.of(0, g, f, c, Mode.EXACT)
        assert radius(line_e).value == Fraction(0)
        line_f = GCircle.of(0.0, float(g), float(f), float(c), Mode.FLOAT)
        assert radius(line_f).value == 0.0
    report(2, "1000 random lines have radius exactly 0 in both modes")


def test_criterion_3_closed_form_vs_oracle():
    rng = random.Random(42)
    start = time.perf_counter()
    for _ in range(1000):
        a = rng.uniform(1e-3, 10.0)
        b = rng.uniform(1e-3, 10.0)
        c_closed = float(gamma_radius(flt(a), flt(b)))
        c_root = float(oracle_solve_c(flt(a), flt(b), 1e-12))
        assert abs(c_closed - c_root) <= 1e-9 * max(1.0, c_closed), (a, b)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    report(3, f"closed form matches bisection oracle on 1000 pairs "
              f"in {elapsed:.2f}s")


def test_criterion_4_exact_five_tangency():
    ks = []
    for den in range(1, 10):
        for num in range(1, 3 * den + 1):
            k = Fraction(num, den)
            if k not in ks:
                ks.append(k)
    pairs = []
    for b in (Fraction(1, 2), Fraction(1), Fraction(3)):
        for k in ks:
            pairs.append((k * k * b, b))
            if len(pairs) == 200:
                break
        if len(pairs) == 200:
            break
    assert len(pairs) == 200
    for a, b in pairs:
        cfg = build_configuration(exact(a), exact(b))
        rep = verify_configuration(cfg)
        for name, value in rep.residuals().items():
            assert value.value == Fraction(0), (a, b, name)
    report(4, "five tangency residuals exactly 0 on 200 exact (k^2 b, b) pairs")


def test_criterion_5_degenerate_outcomes_bit_exact():
    for b_raw in (Fraction(1), Fraction(2), Fraction(7, 3)):
        b = exact(b_raw)
        a0 = exact(0)
        curves = {}
        for form in FORMS:
            curves[("alpha", form)] = alpha_form(form, a0, b)
            curves[("gamma", form)] = gamma_form(form, a0, b)

        a1 = curves[("alpha", FormIndex.FORM1)]
        assert classify(a1) is CurveKind.POINT_CIRCLE
        p = center(a1)
        assert p.x.value == 0 and p.y.value == 0  # point circle at the origin

        a2 = curves[("alpha", FormIndex.FORM2)]
        assert classify(a2) is CurveKind.LINE
        assert a2.f.value == 0 and a2.c.value == 0 and a2.g.value != 0  # x = 0

        a3 = curves[("alpha", FormIndex.FORM3)]
        assert classify(a3) is CurveKind.LINE
        assert a3.g.value == 0  # horizontal: 2fy + c = 0 at y = 2b
        assert a3.c.value / (-2 * a3.f.value) == 2 * b_raw

        g1 = curves[("gamma", FormIndex.FORM1)]
        assert classify(g1) is CurveKind.LINE
        assert g1.g.value == 0 and g1.c.value == 0 and g1.f.value != 0  # y = 0

        g2 = curves[("gamma", FormIndex.FORM2)]
        assert classify(g2) is CurveKind.LINE
        assert g2.f.value == 0 and g2.c.value == 0 and g2.g.value != 0  # x = 0

        g3 = curves[("gamma", FormIndex.FORM3)]
        assert classify(g3) is CurveKind.POINT_CIRCLE
        p = center(g3)
        assert p.x.value == 0 and p.y.value == 2 * b_raw

        for curve in curves.values():
            assert radius(curve).value == 0  # no tolerance
        assert gamma_radius(a0, b).value == Fraction(0)
    report(5, "degenerate forms, radii, and gamma_radius(0,b) bit-exact "
              "for b in {1, 2, 7/3}")


def test_criterion_6_form_equivalence_for_positive_a():
    rng = random.Random(99)
    for _ in range(100):
        a = flt(rng.uniform(0.05, 10.0))
        b = flt(rng.uniform(0.05, 10.0))
        for form_of in (alpha_form, gamma_form):
            curves = [form_of(k, a, b) for k in FORMS]
            kinds = {classify(k) for k in curves}
            assert kinds == {CurveKind.PROPER_CIRCLE}
            r0 = float(radius(curves[0]))
            p0 = center(curves[0])
            for curve in curves[1:]:
                assert float(radius(curve)) == pytest.approx(r0, rel=1e-10)
                p = center(curve)
                assert float(p.x) == pytest.approx(float(p0.x), rel=1e-10)
                assert float(p.y) == pytest.approx(float(p0.y), rel=1e-10)
    report(6, "three alpha and gamma forms agree on 100 random (a, b)")


def test_criterion_7_limit_coherence():
    gamma_gaps = []
    alpha_norms = []
    for a in (1e-2, 1e-4, 1e-6):
        c = 1.0 / (4.0 * a)
        # sqrt(c^2 + 4) - c, written in cancellation-free form
        gap = 4.0 / (math.sqrt(c * c + 4.0) + c)
        assert gap <= 8.0 * a, a
        gamma_gaps.append(gap)
        norm = math.hypot(2.0 * math.sqrt(a), a)
        assert norm <= 3.0 * math.sqrt(a), a
        alpha_norms.append(norm)
    assert gamma_gaps[0] > gamma_gaps[1] > gamma_gaps[2]
    assert alpha_norms[0] > alpha_norms[1] > alpha_norms[2]
    report(7, "gamma-to-origin gap <= 8a and |center_alpha| <= 3 sqrt(a), "
              "both strictly decreasing")


def test_criterion_8_rendering():
    start = time.perf_counter()
    expected_counts = {
        # figure -> (circles, horizontal lines, vertical lines, dots)
        1: (3, 2, 0, 0),
        2: (3, 2, 1, 0),
        3: (1, 2, 0, 1),
        4: (1, 2, 0, 1),
        5: (1, 2, 1, 0),
    }
    for figure_id, (n_circ, n_h, n_v, n_dot) in expected_counts.items():
        spec = FigureSpec(figure_id=figure_id)
        svg = render_figure(spec)
        assert svg == render_figure(spec)  # byte-identical across runs
        root = ET.fromstring(svg)
        classes = [el.get("class") for el in root]
        assert classes.count("circle") == n_circ, figure_id
        assert classes.count("hline") == n_h, figure_id
        assert classes.count("vline") == n_v, figure_id
        assert classes.count("point-circle") == n_dot, figure_id
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    report(8, f"figures 1-5 deterministic, well-formed, with expected "
              f"element counts in {elapsed:.2f}s")
