"""
Exact piecewise polynomials on a line.

A ``PiecewisePoly`` is a strictly increasing knot sequence k_0 < ... < k_{n-1}
and n + 1 polynomials: ``polys[0]`` is the left tail on (-inf, k_0),
``polys[i]`` lives on [k_{i-1}, k_i) and ``polys[n]`` is the right tail on
[k_{n-1}, inf). Evaluation is right-continuous. Polynomials are coefficient
tuples in the global monomial basis, lowest degree first, with trailing
zeros stripped; the zero polynomial is ``()``.

Every operation returns the canonical representation (equal neighbouring
pieces merged), so two equal functions compare equal.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from cswzw.utils import errors

Poly = Tuple


def _div(c, n):
    if isinstance(c, float) or isinstance(n, float):
        return c / n
    return Fraction(c) / Fraction(n)


def poly_trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_sum(p: Poly, q: Poly) -> Poly:
    new_poly = [0] * max(len(p), len(q))
    for i, pi in enumerate(p):
        new_poly[i] += pi
    for j, qj in enumerate(q):
        new_poly[j] += qj
    return poly_trim(new_poly)


def poly_scale(p: Poly, c) -> Poly:
    if c == 0:
        return ()
    return poly_trim(v * c for v in p)


def poly_prod(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    new_poly = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            new_poly[i + j] = new_poly[i + j] + pi * qj
    return poly_trim(new_poly)


def poly_eval(p: Poly, x):
    value = 0
    for v in reversed(p):
        value = value * x + v
    return value


def poly_diff(p: Poly) -> Poly:
    return poly_trim((k + 1) * v for k, v in enumerate(p[1:]))


def poly_integral(p: Poly) -> Poly:
    # Antiderivative vanishing at x = 0
    if not p:
        return ()
    return poly_trim([0] + [_div(v, k + 1) for k, v in enumerate(p)])


def poly_compose_affine(p: Poly, a, b) -> Poly:
    """P(a x + b)"""
    result: Poly = ()
    for c in reversed(p):
        result = poly_sum(poly_prod(result, (b, a)), (c,))
    return result


def poly_abs_bound(p: Poly, radius) -> float:
    # Upper bound of |P| on [-radius, radius]
    return float(sum(abs(float(c)) * float(radius) ** k for k, c in enumerate(p)))


@dataclass(frozen=True)
class PiecewisePoly:
    knots: Tuple = ()
    polys: Tuple[Poly, ...] = ((),)

    def __post_init__(self):
        if len(self.polys) != len(self.knots) + 1:
            raise ValueError("a piecewise polynomial needs one more piece than knots")
        if any(b <= a for a, b in zip(self.knots, self.knots[1:])):
            raise ValueError("knots must be strictly increasing")

    @classmethod
    def make(cls, knots: Sequence, polys: Sequence[Sequence]) -> 'PiecewisePoly':
        polys = [poly_trim(p) for p in polys]
        merged_knots: List = []
        merged_polys: List[Poly] = [polys[0]]
        for knot, poly in zip(knots, polys[1:]):
            if poly == merged_polys[-1]:
                continue
            merged_knots.append(knot)
            merged_polys.append(poly)
        return cls(tuple(merged_knots), tuple(merged_polys))

    @classmethod
    def zero(cls) -> 'PiecewisePoly':
        return cls((), ((),))

    @classmethod
    def constant(cls, value) -> 'PiecewisePoly':
        return cls.make((), [(value,)])

    @classmethod
    def polynomial(cls, coefficients: Sequence) -> 'PiecewisePoly':
        return cls.make((), [coefficients])

    @classmethod
    def indicator(cls, lo, hi) -> 'PiecewisePoly':
        return cls.make((lo, hi), [(), (1,), ()])

    @classmethod
    def from_pieces(cls, knots: Sequence, pieces: Sequence[Sequence],
                    left_tail: Sequence = (), right_tail: Sequence = ()) -> 'PiecewisePoly':
        if len(pieces) != len(knots) - 1:
            raise ValueError("expected one piece per interval between knots")
        return cls.make(knots, [left_tail, *pieces, right_tail])

    @classmethod
    def bspline(cls, knots: Sequence) -> 'PiecewisePoly':
        """Cox-de Boor B-spline of degree len(knots) - 2 on distinct knots."""
        t = list(knots)
        bases = [cls.indicator(t[i], t[i + 1]) for i in range(len(t) - 1)]
        for k in range(1, len(t) - 1):
            new_bases = []
            for i in range(len(bases) - 1):
                w_left = t[i + k] - t[i]
                w_right = t[i + k + 1] - t[i + 1]
                rising = cls.polynomial((_div(-t[i], w_left), _div(1, w_left)))
                falling = cls.polynomial((_div(t[i + k + 1], w_right), _div(-1, w_right)))
                new_bases.append(bases[i] * rising + bases[i + 1] * falling)
            bases = new_bases
        return bases[0]

    # ---- structure ----
    @property
    def left_tail(self) -> Poly:
        return self.polys[0]

    @property
    def right_tail(self) -> Poly:
        return self.polys[-1]

    @property
    def degree(self) -> int:
        return max((len(p) - 1 for p in self.polys), default=-1)

    def is_zero(self) -> bool:
        return all(not p for p in self.polys)

    def is_constant(self) -> bool:
        return not self.knots and len(self.polys[0]) <= 1

    def constant_value(self):
        return self.polys[0][0] if self.polys[0] else 0

    def has_compact_support(self) -> bool:
        return not self.left_tail and not self.right_tail

    def _piece_at(self, x) -> Poly:
        return self.polys[bisect_right(self.knots, x)]

    def pieces_on(self, grid: Sequence) -> List[Poly]:
        # Polynomials on the cells of a refinement grid containing self.knots
        return [self.polys[0]] + [self._piece_at(k) for k in grid]

    def evaluate(self, x):
        return poly_eval(self._piece_at(x), x)

    def support(self) -> Optional[Tuple]:
        # Closed hull of the support, None bounds meaning unbounded
        nonzero = [i for i, p in enumerate(self.polys) if p]
        if not nonzero:
            return None
        lo = None if nonzero[0] == 0 else self.knots[nonzero[0] - 1]
        hi = None if nonzero[-1] == len(self.knots) else self.knots[nonzero[-1]]
        return lo, hi

    # ---- arithmetic ----
    def _binary(self, other: 'PiecewisePoly', op) -> 'PiecewisePoly':
        grid = sorted(set(self.knots) | set(other.knots))
        polys = [op(p, q) for p, q in zip(self.pieces_on(grid), other.pieces_on(grid))]
        return PiecewisePoly.make(grid, polys)

    def __add__(self, other: 'PiecewisePoly') -> 'PiecewisePoly':
        return self._binary(other, poly_sum)

    def __neg__(self) -> 'PiecewisePoly':
        return self.scale(-1)

    def __sub__(self, other: 'PiecewisePoly') -> 'PiecewisePoly':
        return self + (-other)

    def __mul__(self, other: 'PiecewisePoly') -> 'PiecewisePoly':
        return self._binary(other, poly_prod)

    def scale(self, c) -> 'PiecewisePoly':
        return PiecewisePoly.make(self.knots, [poly_scale(p, c) for p in self.polys])

    # ---- calculus ----
    def derivative(self) -> 'PiecewisePoly':
        return PiecewisePoly.make(self.knots, [poly_diff(p) for p in self.polys])

    def antiderivative(self) -> 'PiecewisePoly':
        """Continuous antiderivative; on the left tail it vanishes at x = 0."""
        integrals = [poly_integral(p) for p in self.polys]
        out = [integrals[0]]
        for j, knot in enumerate(self.knots, start=1):
            offset = poly_eval(out[-1], knot) - poly_eval(integrals[j], knot)
            out.append(poly_sum(integrals[j], (offset,)))
        return PiecewisePoly.make(self.knots, out)

    def _limit_at_right(self):
        if len(self.right_tail) > 1:
            raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction="+inf"))
        return self.right_tail[0] if self.right_tail else 0

    def cumulative_from_left(self) -> 'PiecewisePoly':
        """x -> integral of f over (-inf, x]"""
        if self.left_tail:
            raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction="-inf"))
        return self.antiderivative()

    def cumulative_to_right(self) -> 'PiecewisePoly':
        """x -> integral of f over [x, inf)"""
        if self.right_tail:
            raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction="+inf"))
        primitive = self.antiderivative()
        total = primitive._limit_at_right()
        return PiecewisePoly.constant(total) - primitive

    def integral_to(self, end) -> 'PiecewisePoly':
        """x -> integral of f over [x, end]"""
        primitive = self.antiderivative()
        return PiecewisePoly.constant(primitive.evaluate(end)) - primitive

    def definite_integral(self, lo=None, hi=None):
        if lo is None and self.left_tail:
            raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction="-inf"))
        if hi is None and self.right_tail:
            raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction="+inf"))
        primitive = self.antiderivative()
        upper = primitive._limit_at_right() if hi is None else primitive.evaluate(hi)
        lower = 0 if lo is None else primitive.evaluate(lo)
        return upper - lower

    # ---- reparametrization ----
    def shift(self, s) -> 'PiecewisePoly':
        """x -> f(x + s)"""
        return self.affine_pullback(1, s)

    def affine_pullback(self, a, b) -> 'PiecewisePoly':
        """x -> f(a x + b) for a != 0"""
        if a == 0:
            raise ValueError("affine pullback needs a nonzero slope")
        knots = [_div(k - b, a) for k in self.knots]
        polys = [poly_compose_affine(p, a, b) for p in self.polys]
        if a < 0:
            knots.reverse()
            polys.reverse()
        return PiecewisePoly.make(knots, polys)

    # ---- diagnostics ----
    def sup_bound(self, lo=None, hi=None) -> float:
        """Upper bound of |f| on [lo, hi] (None meaning unbounded)."""
        bound = 0.0
        edges = [None, *self.knots, None]
        for poly, left, right in zip(self.polys, edges[:-1], edges[1:]):
            if not poly:
                continue
            a = left if lo is None else (lo if left is None else max(left, lo))
            b = right if hi is None else (hi if right is None else min(right, hi))
            if a is not None and b is not None and b < a:
                continue
            if a is None or b is None:
                if len(poly) > 1:
                    return float('inf')
                bound = max(bound, abs(float(poly[0])))
                continue
            bound = max(bound, poly_abs_bound(poly, max(abs(a), abs(b))))
        return bound

    def continuity_order(self, max_order: int = 4) -> int:
        """Largest m such that derivatives 0..m are continuous at every knot; -1 if f jumps."""
        order = -1
        left_polys, right_polys = list(self.polys[:-1]), list(self.polys[1:])
        for m in range(max_order + 1):
            for knot, p, q in zip(self.knots, left_polys, right_polys):
                if poly_eval(p, knot) != poly_eval(q, knot):
                    return order
            order = m
            left_polys = [poly_diff(p) for p in left_polys]
            right_polys = [poly_diff(q) for q in right_polys]
        return order
