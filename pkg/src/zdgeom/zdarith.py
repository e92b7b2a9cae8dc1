"""Total-division scalar arithmetic: ordinary real arithmetic except x/0 = 0.

Scalars carry one of two numeric modes:

* EXACT -- arbitrary-precision rationals (``fractions.Fraction``), used for
  bit-exact degenerate-case checks.
* FLOAT -- 64-bit binary floats; infinities and NaN are rejected.

Mixing modes in a binary operation is an error; callers convert explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union


class Mode(Enum):
    EXACT = "exact"
    FLOAT = "float"


class ZdError(Exception):
    """Base for scalar arithmetic errors."""


class ModeMismatchError(ZdError):
    """Binary operation on scalars of different numeric modes."""


class NonFiniteError(ZdError):
    """A float-mode operation produced an infinity or NaN."""


class NegativeOperandError(ZdError):
    """Square root of a negative scalar."""


class IrrationalError(ZdError):
    """Exact mode cannot represent the result (non-square rational, etc.)."""


Coercible = Union[int, float, Fraction, "ZdScalar"]


@dataclass(frozen=True)
class ZdScalar:
    """Immutable real scalar whose division is total: x / 0 == 0."""

    value: Union[Fraction, float]
    mode: Mode

    def __post_init__(self):
        if self.mode is Mode.EXACT:
            if not isinstance(self.value, Fraction):
                object.__setattr__(self, "value", Fraction(self.value))
        elif self.mode is Mode.FLOAT:
            v = float(self.value)
            if not math.isfinite(v):
                raise NonFiniteError(f"non-finite float value: {v!r}")
            object.__setattr__(self, "value", v)
        else:  # pragma: no cover - enum is closed
            raise ValueError(f"unknown mode {self.mode!r}")

    # -- construction -----------------------------------------------------

    @staticmethod
    def of(value: Coercible, mode: Mode) -> "ZdScalar":
        if isinstance(value, ZdScalar):
            if value.mode is not mode:
                raise ModeMismatchError(f"expected {mode}, got {value.mode}")
            return value
        if mode is Mode.EXACT:
            if isinstance(value, float):
                # floats are exact binary rationals; accept them verbatim
                return ZdScalar(Fraction(value), Mode.EXACT)
            return ZdScalar(Fraction(value), Mode.EXACT)
        return ZdScalar(float(value), Mode.FLOAT)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __float__(self) -> float:
        return float(self.value)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other: Coercible) -> "ZdScalar":
        if isinstance(other, ZdScalar):
            if other.mode is not self.mode:
                raise ModeMismatchError(
                    f"cannot mix {self.mode.value} and {other.mode.value} scalars"
                )
            return other
        if isinstance(other, bool) or not isinstance(other, (int, float, Fraction)):
            raise TypeError(f"cannot coerce {other!r} to ZdScalar")
        return ZdScalar.of(other, self.mode)

    def _wrap(self, raw) -> "ZdScalar":
        return ZdScalar(raw, self.mode)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: Coercible) -> "ZdScalar":
        return self._wrap(self.value + self._coerce(other).value)

    def __radd__(self, other: Coercible) -> "ZdScalar":
        return self.__add__(other)

    def __sub__(self, other: Coercible) -> "ZdScalar":
        return self._wrap(self.value - self._coerce(other).value)

    def __rsub__(self, other: Coercible) -> "ZdScalar":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other: Coercible) -> "ZdScalar":
        return self._wrap(self.value * self._coerce(other).value)

    def __rmul__(self, other: Coercible) -> "ZdScalar":
        return self.__mul__(other)

    def __truediv__(self, other: Coercible) -> "ZdScalar":
        return zd_div(self, self._coerce(other))

    def __rtruediv__(self, other: Coercible) -> "ZdScalar":
        return zd_div(self._coerce(other), self)

    def __neg__(self) -> "ZdScalar":
        return self._wrap(-self.value)

    def __abs__(self) -> "ZdScalar":
        return self._wrap(abs(self.value))

    def __pow__(self, exponent: int) -> "ZdScalar":
        if not isinstance(exponent, int) or exponent < 0:
            raise TypeError("only nonnegative integer exponents are supported")
        return self._wrap(self.value ** exponent)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, ZdScalar):
            return self.mode is other.mode and self.value == other.value
        if isinstance(other, (int, float, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.mode))

    def __lt__(self, other: Coercible) -> bool:
        return self.value < self._coerce(other).value

    def __le__(self, other: Coercible) -> bool:
        return self.value <= self._coerce(other).value

    def __gt__(self, other: Coercible) -> bool:
        return self.value > self._coerce(other).value

    def __ge__(self, other: Coercible) -> bool:
        return self.value >= self._coerce(other).value

    def __repr__(self) -> str:
        return f"ZdScalar({self.value!r}, {self.mode.value})"

    def __str__(self) -> str:
        return str(self.value)


def exact(value: Coercible) -> ZdScalar:
    """Exact-rational scalar from an int, Fraction, float, or string like '3/4'."""
    if isinstance(value, str):
        return ZdScalar(Fraction(value), Mode.EXACT)
    return ZdScalar.of(value, Mode.EXACT)


def flt(value: Coercible) -> ZdScalar:
    """Float-mode scalar."""
    return ZdScalar.of(value, Mode.FLOAT)


def zero(mode: Mode) -> ZdScalar:
    return ZdScalar(Fraction(0) if mode is Mode.EXACT else 0.0, mode)


def one(mode: Mode) -> ZdScalar:
    return ZdScalar(Fraction(1) if mode is Mode.EXACT else 1.0, mode)


def zd_div(n: ZdScalar, d: ZdScalar) -> ZdScalar:
    """Total division: n/d for d != 0, exactly 0 for d == 0 (including -0.0)."""
    if n.mode is not d.mode:
        raise ModeMismatchError(
            f"cannot divide {n.mode.value} scalar by {d.mode.value} scalar"
        )
    if d.value == 0:
        return zero(n.mode)
    return ZdScalar(n.value / d.value, n.mode)


def _rational_isqrt(x: Fraction) -> Fraction:
    """Exact square root of a nonnegative rational, or raise IrrationalError."""
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise IrrationalError(f"{x} is not the square of a rational")
    return Fraction(rn, rd)


def zd_sqrt(x: ZdScalar) -> ZdScalar:
    """Square root.

    Exact mode returns the exact rational root when one exists, otherwise
    raises IrrationalError (callers fall back to float mode). Negative
    operands are rejected in both modes.
    """
    if x.value < 0:
        raise NegativeOperandError(f"sqrt of negative scalar {x.value}")
    if x.mode is Mode.EXACT:
        return ZdScalar(_rational_isqrt(x.value), Mode.EXACT)
    return ZdScalar(math.sqrt(x.value), Mode.FLOAT)


@dataclass(frozen=True)
class Angle:
    """An angle pi_multiple * pi + residual radians.

    The rational multiple of pi is kept symbolically so that poles of tan
    (odd multiples of pi/2) are detected exactly, never by float comparison.
    """

    pi_multiple: Fraction
    residual: float = 0.0

    def __post_init__(self):
        if not isinstance(self.pi_multiple, Fraction):
            object.__setattr__(self, "pi_multiple", Fraction(self.pi_multiple))
        if not math.isfinite(self.residual):
            raise NonFiniteError("angle residual must be finite")

    @staticmethod
    def of_pi(multiple) -> "Angle":
        return Angle(Fraction(multiple))

    def radians(self) -> float:
        return float(self.pi_multiple) * math.pi + self.residual

    def __str__(self) -> str:
        if self.residual:
            return f"{self.pi_multiple}*pi + {self.residual}"
        return f"{self.pi_multiple}*pi"


# tan values that are exact at rational multiples of pi, keyed by the
# multiple reduced mod 1 (tan has period pi)
_EXACT_TAN = {
    Fraction(0): Fraction(0),
    Fraction(1, 4): Fraction(1),
    Fraction(1, 2): Fraction(0),  # the pole: sin/cos = 1/0 = 0 by total division
    Fraction(3, 4): Fraction(-1),
}


def zd_tan(theta: Angle, mode: Mode = Mode.FLOAT) -> ZdScalar:
    """Tangent under total division: tan(pi/2) = sin/cos = 1/0 = 0.

    Poles are recognized from the symbolic rational-multiple-of-pi part of
    the angle. Away from the exactly-representable multiples, exact mode
    raises IrrationalError and float mode evaluates sin/cos numerically.
    """
    if theta.residual == 0.0:
        key = theta.pi_multiple % 1
        if key in _EXACT_TAN:
            return ZdScalar.of(_EXACT_TAN[key], mode)
        if mode is Mode.EXACT:
            raise IrrationalError(f"tan({theta}) is not rational")
    elif mode is Mode.EXACT:
        raise IrrationalError("exact tan requires a pure rational multiple of pi")
    t = theta.radians()
    return zd_div(flt(math.sin(t)), flt(math.cos(t)))
