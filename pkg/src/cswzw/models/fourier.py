"""
Finite real trigonometric sums on the unit circle R/Z.

Modes are keyed by a signed integer: 0 is the constant, k > 0 is
cos(2 pi k x) and k < 0 is sin(2 pi |k| x). Keeping the real basis means
every sum is real; complex exponential modes are derived on demand.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple


def _accumulate(acc: Dict[int, object], kind: str, m: int, coef) -> None:
    if kind == 'c':
        key = abs(m)
    else:
        if m == 0:
            return
        if m < 0:
            coef, m = -coef, -m
        key = -m
    acc[key] = acc.get(key, 0) + coef


def _half(c):
    return c / 2 if isinstance(c, float) else Fraction(c) / 2


@dataclass(frozen=True)
class FourierPoly:
    modes: Tuple[Tuple[int, object], ...] = ()

    @classmethod
    def make(cls, modes: Dict[int, object]) -> 'FourierPoly':
        return cls(tuple(sorted((k, c) for k, c in modes.items() if c != 0)))

    @classmethod
    def constant(cls, value) -> 'FourierPoly':
        return cls.make({0: value})

    @classmethod
    def cos(cls, k: int, coef=1) -> 'FourierPoly':
        return cls.make({abs(k): coef})

    @classmethod
    def sin(cls, k: int, coef=1) -> 'FourierPoly':
        if k == 0:
            return cls()
        return cls.make({-abs(k): coef if k > 0 else -coef})

    @property
    def is_real(self) -> bool:
        return True

    @property
    def max_mode(self) -> int:
        return max((abs(k) for k, _ in self.modes), default=0)

    def as_dict(self) -> Dict[int, object]:
        return dict(self.modes)

    def is_zero(self) -> bool:
        return not self.modes

    def is_constant(self) -> bool:
        return all(k == 0 for k, _ in self.modes)

    def constant_value(self):
        return self.as_dict().get(0, 0)

    def support(self):
        return None if self.is_zero() else (None, None)

    def __add__(self, other: 'FourierPoly') -> 'FourierPoly':
        acc = self.as_dict()
        for k, c in other.modes:
            acc[k] = acc.get(k, 0) + c
        return FourierPoly.make(acc)

    def __neg__(self) -> 'FourierPoly':
        return self.scale(-1)

    def __sub__(self, other: 'FourierPoly') -> 'FourierPoly':
        return self + (-other)

    def scale(self, c) -> 'FourierPoly':
        if c == 0:
            return FourierPoly()
        return FourierPoly.make({k: v * c for k, v in self.modes})

    def __mul__(self, other: 'FourierPoly') -> 'FourierPoly':
        # product-to-sum identities
        acc: Dict[int, object] = {}
        for k, a in self.modes:
            for l, b in other.modes:
                p = _half(a * b)
                m, n = abs(k), abs(l)
                if k >= 0 and l >= 0:
                    _accumulate(acc, 'c', m - n, p)
                    _accumulate(acc, 'c', m + n, p)
                elif k < 0 and l < 0:
                    _accumulate(acc, 'c', m - n, p)
                    _accumulate(acc, 'c', m + n, -p)
                elif k < 0:
                    _accumulate(acc, 's', m + n, p)
                    _accumulate(acc, 's', m - n, p)
                else:
                    _accumulate(acc, 's', n + m, p)
                    _accumulate(acc, 's', n - m, p)
        return FourierPoly.make(acc)

    def derivative(self) -> 'FourierPoly':
        """The x-derivative divided by pi (callers track the pi power)."""
        acc: Dict[int, object] = {}
        for k, c in self.modes:
            if k > 0:
                acc[-k] = acc.get(-k, 0) - 2 * k * c
            elif k < 0:
                acc[-k] = acc.get(-k, 0) + 2 * (-k) * c
        return FourierPoly.make(acc)

    def mean(self):
        # Integral over one period of unit length
        return self.constant_value()

    def evaluate(self, x) -> float:
        value = 0.0
        for k, c in self.modes:
            if k == 0:
                value += float(c)
            elif k > 0:
                value += float(c) * math.cos(2 * math.pi * k * float(x))
            else:
                value += float(c) * math.sin(2 * math.pi * (-k) * float(x))
        return value

    def complex_modes(self) -> Dict[int, complex]:
        """Coefficients c_n of sum c_n exp(2 pi i n x)."""
        out: Dict[int, complex] = {}
        for k, c in self.modes:
            c = float(c)
            if k == 0:
                out[0] = out.get(0, 0) + c
            elif k > 0:
                out[k] = out.get(k, 0) + c / 2
                out[-k] = out.get(-k, 0) + c / 2
            else:
                m = -k
                out[m] = out.get(m, 0) - 0.5j * c
                out[-m] = out.get(-m, 0) + 0.5j * c
        return out

    def sup_bound(self, lo=None, hi=None) -> float:
        return float(sum(abs(float(c)) for _, c in self.modes))
