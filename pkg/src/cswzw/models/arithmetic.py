"""
Scalar backends.

Coefficients are either exact rationals (``fractions.Fraction``) or doubles.
Both go through the same calculus code; the backend only decides how
samples are coerced, which tolerance a check uses, and how a finished
scalar (an element of Q[pi]) is handed back to the caller.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Union

import sympy

Scalar = Union[Fraction, float, int]

FLOAT_TOLERANCE = 1e-9


class Backend(Enum):
    EXACT = 'exact'
    FLOAT = 'float'


def parse_rational(value) -> Fraction:
    # Accepts "p/q" strings, ints, decimal strings and Fractions
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10 ** 12)
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


@dataclass(frozen=True)
class Arithmetic:
    backend: Backend = Backend.EXACT
    tolerance: float = 0.0

    @classmethod
    def exact(cls) -> 'Arithmetic':
        return cls(Backend.EXACT, 0.0)

    @classmethod
    def floating(cls, tolerance: float = FLOAT_TOLERANCE) -> 'Arithmetic':
        return cls(Backend.FLOAT, tolerance)

    @classmethod
    def from_name(cls, name: str, tolerance: float = FLOAT_TOLERANCE) -> 'Arithmetic':
        if Backend(name) == Backend.EXACT:
            return cls.exact()
        return cls.floating(tolerance)

    @property
    def is_exact(self) -> bool:
        return self.backend == Backend.EXACT

    def scalar(self, value) -> Scalar:
        if self.is_exact:
            return parse_rational(value)
        if isinstance(value, str):
            return float(parse_rational(value))
        return float(value)

    def within_tolerance(self, residual: float) -> bool:
        return residual <= self.tolerance

    def from_pi_series(self, series: Dict[int, Scalar]):
        """Turn {power: coefficient} into a scalar sum of c * pi**power."""
        if self.is_exact and all(isinstance(c, (Fraction, int)) for c in series.values()):
            total = sympy.Integer(0)
            for power in sorted(series):
                c = Fraction(series[power])
                total += sympy.Rational(c.numerator, c.denominator) * sympy.pi ** power
            return total
        return float(sum(float(c) * math.pi ** power for power, c in series.items()))

    @property
    def imaginary_unit(self):
        return sympy.I if self.is_exact else 1j

    def magnitude(self, value) -> float:
        # Absolute value of any scalar this backend produces, as a float
        if isinstance(value, sympy.Basic):
            return float(sympy.Abs(value).evalf())
        return float(abs(value))

    def is_zero(self, value) -> bool:
        if isinstance(value, sympy.Basic):
            if self.is_exact:
                return sympy.expand(value) == 0
            return self.magnitude(value) <= self.tolerance
        return self.magnitude(value) <= self.tolerance


def pi_series_bound(series: Dict[int, Scalar]) -> float:
    return float(sum(abs(float(c)) * math.pi ** power for power, c in series.items()))
