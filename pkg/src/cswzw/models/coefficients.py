"""
Coefficient fields on product charts.

A ``CoeffField`` is a finite sum of separable terms

    coef * pi**pi_power * f_0(x_0) * f_1(x_1) * ... * f_{n-1}(x_{n-1})

where each factor is a ``PiecewisePoly`` (line, half-line, interval or an
arc-localized circle factor) or a ``FourierPoly`` (circle). Factors are
stored normalized (leading coefficient 1) so that terms sharing their
factors merge on addition. Constant factors are always the constant
``PiecewisePoly``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.fourier import FourierPoly
from cswzw.models.piecewise import PiecewisePoly
from cswzw.utils import errors

Factor = Union[PiecewisePoly, FourierPoly]

ONE = PiecewisePoly.constant(1)

# relative size below which a float expansion coordinate is rounding residue
FLOAT_NOISE = 1e-12


def _inverse(c):
    return 1.0 / c if isinstance(c, float) else Fraction(1) / Fraction(c)


def leading_coefficient(factor: Factor):
    if isinstance(factor, FourierPoly):
        return factor.modes[0][1]
    for poly in factor.polys:
        if poly:
            for c in poly:
                if c != 0:
                    return c
    return 0


def normalize_factor(factor: Factor) -> Tuple[object, Factor]:
    """Split a nonzero factor into (scale, unit-leading factor)."""
    if isinstance(factor, FourierPoly) and factor.is_constant():
        return factor.constant_value(), ONE
    lead = leading_coefficient(factor)
    if lead == 1:
        return 1, factor
    return lead, factor.scale(_inverse(lead))


def factor_product(a: Factor, b: Factor) -> Factor:
    if type(a) is type(b):
        return a * b
    if a.is_constant():
        return b.scale(a.constant_value())
    if b.is_constant():
        return a.scale(b.constant_value())
    raise errors.WorkbenchError(errors.MIXED_CIRCLE_FACTORS)


def factor_sum(factors: Sequence[Factor]) -> Factor:
    total = factors[0]
    for f in factors[1:]:
        total = total + f
    return total


@dataclass(frozen=True)
class Term:
    coef: object
    pi_power: int
    factors: Tuple[Factor, ...]

    @property
    def key(self) -> Tuple:
        return (self.pi_power, self.factors)


def make_term(coef, pi_power: int, factors: Iterable[Factor]) -> Optional[Term]:
    """Normalize factors into the scalar; returns None for a zero term."""
    if coef == 0:
        return None
    normalized = []
    for factor in factors:
        if factor.is_zero():
            return None
        scale, unit = normalize_factor(factor)
        coef = coef * scale
        normalized.append(unit)
    return Term(coef, pi_power, tuple(normalized))


@dataclass(frozen=True)
class CoeffField:
    arity: int
    terms: Tuple[Term, ...] = ()

    # ---- construction ----
    @classmethod
    def build(cls, arity: int, terms: Iterable[Optional[Term]]) -> 'CoeffField':
        merged: Dict[Tuple, object] = {}
        for term in terms:
            if term is None:
                continue
            merged[term.key] = merged.get(term.key, 0) + term.coef
        return cls(arity, tuple(Term(c, key[0], key[1]) for key, c in merged.items() if c != 0))

    @classmethod
    def zero(cls, arity: int) -> 'CoeffField':
        return cls(arity, ())

    @classmethod
    def constant(cls, arity: int, value) -> 'CoeffField':
        return cls.build(arity, [make_term(value, 0, [ONE] * arity)])

    @classmethod
    def separable(cls, factors: Sequence[Factor], coef=1, pi_power: int = 0) -> 'CoeffField':
        return cls.build(len(factors), [make_term(coef, pi_power, factors)])

    # ---- algebra ----
    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: 'CoeffField') -> 'CoeffField':
        return CoeffField.build(self.arity, self.terms + other.terms)

    def __neg__(self) -> 'CoeffField':
        return self.scale(-1)

    def __sub__(self, other: 'CoeffField') -> 'CoeffField':
        return self + (-other)

    def scale(self, c) -> 'CoeffField':
        if c == 0:
            return CoeffField.zero(self.arity)
        return CoeffField(self.arity, tuple(Term(t.coef * c, t.pi_power, t.factors) for t in self.terms))

    def __mul__(self, other: 'CoeffField') -> 'CoeffField':
        terms = []
        for s in self.terms:
            for t in other.terms:
                factors = [factor_product(a, b) for a, b in zip(s.factors, t.factors)]
                terms.append(make_term(s.coef * t.coef, s.pi_power + t.pi_power, factors))
        return CoeffField.build(self.arity, terms)

    # ---- axis operations ----
    def transform_axis(self, axis: int, fn: Callable[[Factor], Factor]) -> 'CoeffField':
        terms = []
        for t in self.terms:
            factors = list(t.factors)
            factors[axis] = fn(factors[axis])
            terms.append(make_term(t.coef, t.pi_power, factors))
        return CoeffField.build(self.arity, terms)

    def partial(self, axis: int) -> 'CoeffField':
        terms = []
        for t in self.terms:
            factors = list(t.factors)
            factor = factors[axis]
            factors[axis] = factor.derivative()
            # Fourier derivatives come back divided by pi
            pi_power = t.pi_power + (1 if isinstance(factor, FourierPoly) else 0)
            terms.append(make_term(t.coef, pi_power, factors))
        return CoeffField.build(self.arity, terms)

    def collapse_axis(self, axis: int, fn: Callable[[Factor], object]) -> 'CoeffField':
        """Replace the factor on ``axis`` by the scalar fn(factor) and drop the axis."""
        terms = []
        for t in self.terms:
            value = fn(t.factors[axis])
            terms.append(make_term(t.coef * value, t.pi_power, t.factors[:axis] + t.factors[axis + 1:]))
        return CoeffField.build(self.arity - 1, terms)

    def insert_axis(self, axis: int, factor: Factor = ONE) -> 'CoeffField':
        terms = [make_term(t.coef, t.pi_power, t.factors[:axis] + (factor,) + t.factors[axis:])
                 for t in self.terms]
        return CoeffField.build(self.arity + 1, terms)

    def evaluate(self, point: Sequence) -> float:
        total = 0.0
        for t in self.terms:
            value = float(t.coef) * math.pi ** t.pi_power
            for factor, x in zip(t.factors, point):
                value *= float(factor.evaluate(x))
            total += value
        return total

    def evaluate_exact(self, point: Sequence):
        # Only meaningful when no Fourier factor is present
        total = 0
        for t in self.terms:
            if t.pi_power:
                raise ValueError("exact evaluation of a pi-weighted term")
            value = t.coef
            for factor, x in zip(t.factors, point):
                if isinstance(factor, FourierPoly):
                    raise ValueError("exact evaluation of a Fourier factor")
                value = value * factor.evaluate(x)
            total = total + value
        return total

    # ---- support ----
    def axis_support(self, axis: int) -> Optional[Tuple]:
        lo, hi, seen = None, None, False
        for t in self.terms:
            s = t.factors[axis].support()
            if s is None:
                continue
            if not seen:
                lo, hi, seen = s[0], s[1], True
                continue
            lo = None if (lo is None or s[0] is None) else min(lo, s[0])
            hi = None if (hi is None or s[1] is None) else max(hi, s[1])
        return (lo, hi) if seen else None

    def support_hulls(self, tolerance: float = 0.0) -> Optional[List[Tuple]]:
        """
        Per-axis closed hull of the support of the summed field, None bounds
        meaning unbounded; None if the field vanishes. Terms are merged on a
        common knot grid first, so tails that cancel between terms do not count.
        """
        field = self.consolidated()
        grids = [field.knots(axis) for axis in range(self.arity)]
        coords = field.expansion(grids, [(None, None)] * self.arity)
        sizes = {key: abs(float(c)) * math.pi ** key[-1] for key, c in coords.items()}
        if any(isinstance(c, float) for c in coords.values()):
            # float sums leave rounding noise where exact tails cancel
            tolerance = max(tolerance, FLOAT_NOISE * max(sizes.values(), default=0.0))
        hulls: List[Optional[Tuple]] = [None] * self.arity
        for key, size in sizes.items():
            if size <= tolerance:
                continue
            for axis in range(self.arity):
                part, grid = key[axis], grids[axis]
                if part[0] == 'f':
                    cell = (None, None)
                else:
                    i = part[1]
                    cell = (None if i == 0 else grid[i - 1], None if i == len(grid) else grid[i])
                hull = hulls[axis]
                if hull is None:
                    hulls[axis] = cell
                else:
                    hulls[axis] = (None if hull[0] is None or cell[0] is None else min(hull[0], cell[0]),
                                   None if hull[1] is None or cell[1] is None else max(hull[1], cell[1]))
        if any(h is None for h in hulls):
            return None
        return hulls

    def knots(self, axis: int) -> List:
        knots = set()
        for t in self.terms:
            factor = t.factors[axis]
            if isinstance(factor, PiecewisePoly):
                knots.update(factor.knots)
        return sorted(knots)

    # ---- zero testing ----
    def consolidated(self) -> 'CoeffField':
        """Sum terms that agree on all factors but one, until nothing merges."""
        terms = list(self.terms)
        changed = True
        while changed and terms:
            changed = False
            for axis in range(self.arity):
                groups: Dict[Tuple, List[Term]] = {}
                for t in terms:
                    others = t.factors[:axis] + t.factors[axis + 1:]
                    groups.setdefault((t.pi_power, others, type(t.factors[axis])), []).append(t)
                merged = []
                for (pi_power, others, _), group in groups.items():
                    if len(group) == 1:
                        merged.append(group[0])
                        continue
                    changed = True
                    total = factor_sum([g.factors[axis].scale(g.coef) for g in group])
                    factors = others[:axis] + (total,) + others[axis:]
                    term = make_term(1, pi_power, factors)
                    if term is not None:
                        merged.append(term)
                terms = merged
        return CoeffField(self.arity, tuple(terms))

    def expansion(self, grids: Sequence[Sequence], domains: Sequence[Tuple]) -> Dict[Tuple, object]:
        """
        Coordinates in a canonical basis: per axis, monomials on the cells of
        ``grids[axis]`` that meet ``domains[axis]`` (an open (lo, hi) window),
        plus nonconstant trigonometric modes. Keys end with the pi power.
        """
        cells = [_domain_cells(grid, domain) for grid, domain in zip(grids, domains)]
        coords: Dict[Tuple, object] = {}
        for t in self.terms:
            per_axis = [_factor_coordinates(f, grid, valid)
                        for f, grid, valid in zip(t.factors, grids, cells)]
            for combo in cartesian(*per_axis):
                key = tuple(k for k, _ in combo) + (t.pi_power,)
                value = t.coef
                for _, c in combo:
                    value = value * c
                coords[key] = coords.get(key, 0) + value
        return {k: v for k, v in coords.items() if v != 0}

    def residual(self, domains: Sequence[Tuple], arithmetic: Arithmetic = None) -> float:
        """0.0 when the field vanishes on the domain, else a coefficient max-norm."""
        arithmetic = arithmetic or Arithmetic.exact()
        field = self.consolidated()
        if not field.terms:
            return 0.0
        grids = [field.knots(axis) for axis in range(self.arity)]
        coords = field.expansion(grids, domains)
        if arithmetic.is_exact:
            return max((abs(float(c)) * math.pi ** key[-1] for key, c in coords.items()), default=0.0)
        folded: Dict[Tuple, float] = {}
        for key, c in coords.items():
            folded[key[:-1]] = folded.get(key[:-1], 0.0) + float(c) * math.pi ** key[-1]
        return max((abs(v) for v in folded.values()), default=0.0)

    def sup_bound(self) -> float:
        return float(sum(abs(float(t.coef)) * math.pi ** t.pi_power *
                         math.prod(f.sup_bound() for f in t.factors) for t in self.terms))


def _domain_cells(grid: Sequence, domain: Tuple) -> List[int]:
    # Indices of grid cells meeting the open window (lo, hi); cell i is [g_{i-1}, g_i)
    lo, hi = domain
    edges = [None, *grid, None]
    valid = []
    for i in range(len(grid) + 1):
        a, b = edges[i], edges[i + 1]
        left = a if lo is None else (lo if a is None else max(a, lo))
        right = b if hi is None else (hi if b is None else min(b, hi))
        if left is None or right is None or left < right:
            valid.append(i)
    return valid


def _factor_coordinates(factor: Factor, grid: Sequence, valid: List[int]) -> List[Tuple]:
    out = []
    if isinstance(factor, FourierPoly):
        for k, c in factor.modes:
            if k == 0:
                out.extend((('p', i, 0), c) for i in valid)
            else:
                out.append((('f', k), c))
        return out
    pieces = factor.pieces_on(grid)
    for i in valid:
        out.extend((('p', i, power), c) for power, c in enumerate(pieces[i]) if c != 0)
    return out
