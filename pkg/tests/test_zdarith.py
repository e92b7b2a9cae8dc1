import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgeom.zdarith import (
    Angle,
    IrrationalError,
    Mode,
    ModeMismatchError,
    NegativeOperandError,
    NonFiniteError,
    ZdScalar,
    exact,
    flt,
    zd_div,
    zd_sqrt,
    zd_tan,
    zero,
)

rationals = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=50)


class TestZdDiv:
    def test_one_over_zero_is_zero(self):
        assert zd_div(exact(1), exact(0)) == 0
        assert zd_div(flt(1), flt(0)) == 0

    def test_zero_over_zero_is_zero(self):
        assert zd_div(exact(0), exact(0)) == 0

    def test_ordinary_division(self):
        assert zd_div(exact(6), exact(3)) == 2
        assert zd_div(flt(6), flt(3)) == 2.0

    def test_negative_zero_divisor(self):
        assert zd_div(flt(3.5), flt(-0.0)) == 0
        assert float(zd_div(flt(3.5), flt(-0.0))) == 0.0

    def test_mode_mismatch(self):
        with pytest.raises(ModeMismatchError):
            zd_div(exact(1), flt(1))

    def test_operator_is_total(self):
        assert (exact(5) / exact(0)) == 0
        assert (flt(5) / flt(0)) == 0

    @given(rationals)
    def test_derivation_a_over_zero(self, a):
        # F(a,0) = 2 F(a,0) forces F(a,0) = 0
        lhs = zd_div(exact(a), exact(0))
        assert lhs == 2 * lhs
        assert lhs == 0

    @given(rationals, rationals, rationals, rationals)
    def test_f_law_exact(self, a, b, c, d):
        sa, sb, sc, sd = (exact(v) for v in (a, b, c, d))
        assert zd_div(sa, sb) * zd_div(sc, sd) == zd_div(sa * sc, sb * sd)

    @given(rationals, rationals)
    def test_consistency_with_ordinary_division(self, n, d):
        if d == 0:
            d = Fraction(1)
        assert zd_div(exact(n), exact(d)).value == n / d

    @given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
    def test_float_consistency_with_ordinary_division(self, n, d):
        if d == 0.0:
            return
        assert zd_div(flt(n), flt(d)).value == n / d


class TestScalar:
    def test_float_mode_rejects_nonfinite(self):
        with pytest.raises(NonFiniteError):
            flt(float("inf"))
        with pytest.raises(NonFiniteError):
            flt(float("nan"))

    def test_overflow_is_an_error(self):
        big = flt(1e308)
        with pytest.raises(NonFiniteError):
            _ = big * big

    def test_exact_mode_normalizes(self):
        v = exact(Fraction(2, -4))
        assert v.value == Fraction(-1, 2)
        assert v.value.denominator == 2

    def test_mixed_mode_add_rejected(self):
        with pytest.raises(ModeMismatchError):
            exact(1) + flt(1)

    def test_int_coercion(self):
        assert exact(Fraction(1, 2)) + 1 == Fraction(3, 2)
        assert flt(0.5) * 2 == 1.0

    def test_immutability(self):
        with pytest.raises(AttributeError):
            exact(1).value = Fraction(2)


class TestZdSqrt:
    def test_sqrt_zero(self):
        assert zd_sqrt(exact(0)) == 0
        assert zd_sqrt(flt(0)) == 0

    def test_perfect_rational_square(self):
        assert zd_sqrt(exact(Fraction(9, 4))) == Fraction(3, 2)

    def test_irrational_in_exact_mode(self):
        with pytest.raises(IrrationalError):
            zd_sqrt(exact(2))

    def test_float_sqrt(self):
        assert float(zd_sqrt(flt(2))) == pytest.approx(math.sqrt(2))

    def test_negative_operand(self):
        with pytest.raises(NegativeOperandError):
            zd_sqrt(exact(-1))
        with pytest.raises(NegativeOperandError):
            zd_sqrt(flt(-0.5))

    @given(rationals)
    def test_square_round_trip(self, r):
        assert zd_sqrt(exact(r) * exact(r)) == abs(r)


class TestZdTan:
    def test_pole_at_half_pi(self):
        assert zd_tan(Angle.of_pi(Fraction(1, 2))) == 0

    def test_tan_zero(self):
        assert zd_tan(Angle.of_pi(0)) == 0

    def test_tan_quarter_pi(self):
        assert zd_tan(Angle.of_pi(Fraction(1, 4))) == 1
        assert zd_tan(Angle.of_pi(Fraction(3, 4))) == -1

    @pytest.mark.parametrize("k", range(-3, 4))
    def test_pole_periodicity(self, k):
        theta = Angle.of_pi(Fraction(1, 2) + k)
        assert zd_tan(theta) == 0
        assert zd_tan(theta, Mode.EXACT) == 0

    def test_generic_angle_matches_math_tan(self):
        theta = Angle.of_pi(Fraction(1, 6))
        assert float(zd_tan(theta)) == pytest.approx(math.tan(math.pi / 6))

    def test_residual_angle(self):
        theta = Angle(Fraction(0), residual=0.3)
        assert float(zd_tan(theta)) == pytest.approx(math.tan(0.3))

    def test_exact_mode_generic_angle_is_irrational(self):
        with pytest.raises(IrrationalError):
            zd_tan(Angle.of_pi(Fraction(1, 6)), Mode.EXACT)


def test_zero_and_modes():
    assert zero(Mode.EXACT).value == Fraction(0)
    assert zero(Mode.FLOAT).value == 0.0
    assert ZdScalar.of(exact(3), Mode.EXACT) == 3
    with pytest.raises(ModeMismatchError):
        ZdScalar.of(exact(3), Mode.FLOAT)
