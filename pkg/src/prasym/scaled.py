"""Reals with an unbounded binary exponent.

Polynomial values along the recurrences reach 10^1000 and beyond, so they are
carried as ``sign * m * 2**e`` with ``m`` in [1, 2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

LN2 = math.log(2.0)


@dataclass(frozen=True)
class ScaledReal:
    sign: int
    significand: float
    exponent: int

    def __post_init__(self):
        if self.sign == 0:
            return
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if not (1.0 <= self.significand < 2.0):
            raise ValueError("significand must lie in [1, 2)")

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls) -> "ScaledReal":
        return cls(0, 0.0, 0)

    @classmethod
    def from_parts(cls, mant: float, exp2: int) -> "ScaledReal":
        """Normalise ``mant * 2**exp2`` (mant any finite float)."""
        if mant == 0.0:
            return cls.zero()
        if not math.isfinite(mant):
            raise ValueError("non-finite significand")
        m, e = math.frexp(abs(mant))  # m in [0.5, 1)
        return cls(1 if mant > 0 else -1, 2.0 * m, int(exp2) + e - 1)

    @classmethod
    def from_float(cls, x: float) -> "ScaledReal":
        return cls.from_parts(float(x), 0)

    @classmethod
    def from_log(cls, logabs: float, sign: int = 1) -> "ScaledReal":
        """Build from a natural log of the magnitude."""
        if sign == 0 or logabs == -math.inf:
            return cls.zero()
        if not math.isfinite(logabs):
            raise ValueError("log magnitude must be finite")
        l2 = logabs / LN2
        e = math.floor(l2)
        m = 2.0 ** (l2 - e)
        if m >= 2.0:
            m, e = 1.0, e + 1
        return cls(1 if sign > 0 else -1, m, int(e))

    # queries --------------------------------------------------------------
    def log(self) -> float:
        """Natural log of |value| (-inf for zero)."""
        if self.sign == 0:
            return -math.inf
        return math.log(self.significand) + self.exponent * LN2

    def log10(self) -> float:
        return self.log() / math.log(10.0)

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.ldexp(self.significand, self.exponent)
        except OverflowError:
            return self.sign * math.inf

    def __float__(self):
        return self.to_float()

    def to_json(self) -> dict:
        return {"sign": self.sign, "log10_magnitude": None if self.sign == 0 else self.log10()}

    # arithmetic -----------------------------------------------------------
    def __neg__(self):
        return ScaledReal(-self.sign, self.significand, self.exponent)

    def __abs__(self):
        return ScaledReal(abs(self.sign), self.significand, self.exponent)

    def __mul__(self, other):
        other = _coerce(other)
        if self.sign == 0 or other.sign == 0:
            return ScaledReal.zero()
        return ScaledReal.from_parts(self.sign * other.sign * self.significand * other.significand,
                                     self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.sign == 0:
            raise ZeroDivisionError("division by zero ScaledReal")
        if self.sign == 0:
            return ScaledReal.zero()
        return ScaledReal.from_parts(self.sign * other.sign * self.significand / other.significand,
                                     self.exponent - other.exponent)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __add__(self, other):
        other = _coerce(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        e = max(self.exponent, other.exponent)
        a = math.ldexp(self.sign * self.significand, self.exponent - e)
        b = math.ldexp(other.sign * other.significand, other.exponent - e)
        return ScaledReal.from_parts(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def ratio(self, other) -> float:
        """self / other as a plain float (assumed moderate)."""
        return (self / _coerce(other)).to_float()

    def __repr__(self):
        if self.sign == 0:
            return "ScaledReal(0)"
        return f"ScaledReal({self.sign * self.significand!r} * 2**{self.exponent})"


def _coerce(v) -> ScaledReal:
    if isinstance(v, ScaledReal):
        return v
    return ScaledReal.from_float(float(v))
