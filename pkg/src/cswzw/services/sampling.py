"""
Seeded random samples for the verification suites.

Every suite draws from its own generator, seeded by the master seed and a
CRC of the suite name, so adding or reordering suites never changes the
samples another suite sees. Samples are exact: knots live on a dyadic
lattice and coefficients are small integers.
"""

import logging
import zlib
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.coefficients import CoeffField
from cswzw.models.form import Form
from cswzw.models.fourier import FourierPoly
from cswzw.models.geometry import Geometry
from cswzw.models.piecewise import PiecewisePoly
from cswzw.models.region import Region
from cswzw.models.spaces import Space, SpaceKind

logger = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)
MAX_MODE = 2
KNOT_STEPS = 16


def suite_rng(seed: int, name: str) -> numpy.random.Generator:
    """Independent generator for one suite, derived from the master seed."""
    return numpy.random.default_rng(numpy.random.SeedSequence([int(seed), zlib.crc32(name.encode('utf-8'))]))


def quarter_points(lo: Fraction, hi: Fraction) -> List[Fraction]:
    count = int((hi - lo) / QUARTER)
    return [lo + k * QUARTER for k in range(count + 1)]


class FormSampler:
    """Random forms for one geometry, drawn from a single generator."""

    def __init__(self, geometry: Geometry, rng: numpy.random.Generator, arithmetic: Arithmetic = None):
        self.geometry = geometry
        self.rng = rng
        self.arithmetic = arithmetic or Arithmetic.exact()

    # ---- scalars and factors ----
    def choice(self, values: Sequence):
        return values[int(self.rng.integers(len(values)))]

    def coefficient(self) -> Fraction:
        return Fraction(self.choice([-3, -2, -1, 1, 2, 3]))

    def spline_in(self, lo: Fraction, hi: Fraction) -> PiecewisePoly:
        """Quadratic B-spline with knots strictly inside (lo, hi), times a linear factor."""
        step = (hi - lo) / KNOT_STEPS
        picks = sorted(int(k) for k in self.rng.choice(numpy.arange(1, KNOT_STEPS), size=4, replace=False))
        spline = PiecewisePoly.bspline([lo + k * step for k in picks])
        slope = Fraction(int(self.rng.integers(-2, 3)), 2)
        return spline * PiecewisePoly.polynomial((Fraction(1), slope)) if slope else spline

    def fourier(self) -> FourierPoly:
        keys = self.rng.choice(numpy.arange(-MAX_MODE, MAX_MODE + 1), size=int(self.rng.integers(1, 4)),
                               replace=False)
        return FourierPoly.make({int(k): self.coefficient() for k in keys})

    def _spatial_factor(self, space: Space, axis: int):
        direction = space.directions[axis]
        if direction.is_circle:
            return self.fourier()
        return self.spline_in(Fraction(-1), Fraction(1))

    def _normal_factor(self, space: Space, vanish: bool) -> PiecewisePoly:
        # free factors may be nonzero on the boundary, vanishing ones are supported inside
        if space.kind == SpaceKind.TUBULAR:
            return self.spline_in(Fraction(0) if vanish else Fraction(-1, 2), Fraction(1))
        if self.geometry.is_cylinder:
            r0 = self.geometry.inner_radius
            return self.spline_in(r0, Fraction(1) if vanish else Fraction(5, 4))
        return self.spline_in(Fraction(0) if vanish else Fraction(-1, 2), Fraction(1))

    def _field(self, space: Space, vanish: bool) -> CoeffField:
        factors = []
        for axis, direction in enumerate(space.directions):
            if axis == space.normal_axis:
                factors.append(self._normal_factor(space, vanish))
            elif direction.name == 'tau':
                factors.append(self.spline_in(Fraction(-1), Fraction(1)))
            else:
                factors.append(self._spatial_factor(space, axis))
        return CoeffField.separable(factors, self.arithmetic.scalar(self.coefficient()))

    def form(self, space: Space, degree: int, shift: int, vanish_indices=()) -> Form:
        """One random term per multi-index; listed indices get boundary-vanishing factors."""
        if degree < 0 or degree > space.dim:
            return Form.zero(space, degree, shift)
        components = []
        for index in combinations(range(space.dim), degree):
            if degree and self.rng.random() < 0.25:
                continue
            components.append((index, self._field(space, index in vanish_indices)))
        if not components:
            index = tuple(range(degree))
            components.append((index, self._field(space, index in vanish_indices)))
        return Form.build(space, degree, shift, components)

    # ---- samples per complex ----
    def bulk_field(self, degree: int, shift: int = 1) -> Form:
        return self.form(self.geometry.bulk, degree, shift)

    def conditioned_bulk(self, degree: int, shift: int = 1) -> Form:
        """Bulk forms whose boundary pullback satisfies the chiral condition."""
        vanish = {0: [()], 1: [(0,)]}.get(degree, [])
        return self.form(self.geometry.bulk, degree, shift, vanish)

    def lin_obs(self, degree: int) -> Form:
        return self.conditioned_bulk(degree, shift=2)

    def boundary_field(self, degree: int, shift: int = 1) -> Form:
        return self.form(self.geometry.boundary, degree, shift)

    def chiral_boundary(self, degree: int, shift: int = 1) -> Form:
        """Boundary forms in L: only the spatial leg survives in degree 1."""
        space = self.geometry.boundary
        if degree == 0:
            return Form.zero(space, 0, shift)
        if degree == 1:
            return Form.build(space, 1, shift, [((1,), self._field(space, False))])
        return self.form(space, degree, shift)

    def base_obs(self, degree: int) -> Form:
        return self.form(self.geometry.base, degree, 1, [()] if degree == 0 else [])

    def collar_obs(self, degree: int) -> Form:
        return self.form(self.geometry.tubular, degree, 1, [()] if degree == 0 else [])

    def circle_form(self, degree: int, shift: int = 0) -> Form:
        return self.form(self.geometry.boundary_circle, degree, shift)

    def chiral_boson(self) -> Form:
        return self.circle_form(0, 0)

    def arc_function(self, lo: Fraction, hi: Fraction) -> Form:
        """Chiral boson function supported strictly inside the arc (lo, hi)."""
        space = self.geometry.boundary_circle
        field = CoeffField.separable([self.spline_in(lo, hi)], self.arithmetic.scalar(self.coefficient()))
        return Form.scalar_function(space, field)

    def lin_obs_in_box(self, degree: int, box: Sequence[Tuple[Fraction, Fraction]]) -> Form:
        """
        Linear observable with every factor supported strictly inside the
        given bounded intervals, which makes the boundary condition void.
        """
        space = self.geometry.bulk
        components = []
        for index in combinations(range(space.dim), degree):
            factors = [self.spline_in(lo, hi) for lo, hi in box]
            components.append((index, CoeffField.separable(factors, self.arithmetic.scalar(self.coefficient()))))
        return Form.build(space, degree, 2, components)

    def degrees(self, count: int, choices: Sequence[int]) -> List[int]:
        return [int(self.choice(list(choices))) for _ in range(count)]

    def complementary_pair(self, sample, total: int, dim: int = None) -> Tuple[Form, Form]:
        """
        (a, b) of de Rham degrees summing to ``total``, drawn with
        ``sample(degree)``; both degrees stay within 0..dim (bulk by default).
        """
        dim = self.geometry.bulk.dim if dim is None else dim
        lo, hi = max(0, total - dim), min(dim, total)
        first = int(self.rng.integers(lo, hi + 1))
        return sample(first), sample(total - first)


class RegionSampler:
    """Random box unions with endpoints on the quarter lattice."""

    def __init__(self, geometry: Geometry, rng: numpy.random.Generator):
        self.geometry = geometry
        self.rng = rng

    def choice(self, values: Sequence):
        return values[int(self.rng.integers(len(values)))]

    def _open_interval(self, points: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
        a, b = sorted(int(k) for k in self.rng.choice(len(points), size=2, replace=False))
        return points[a], points[b]

    def interval(self, space: Space, axis: int) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        direction = space.directions[axis]
        if direction.is_circle:
            if self.rng.random() < 0.1:
                return None, None
            points = quarter_points(Fraction(0), Fraction(3, 4))
            a, b = self.rng.choice(len(points), size=2, replace=False)
            return points[int(a)], points[int(b)]
        if axis == space.normal_axis:
            if self.geometry.is_cylinder:
                points = quarter_points(self.geometry.inner_radius, Fraction(1))
                lo, hi = self._open_interval(points)
                lo = None if lo == self.geometry.inner_radius else lo
                return lo, None if hi == 1 and self.rng.random() < 0.5 else hi
            points = quarter_points(Fraction(0), Fraction(1))
            lo, hi = self._open_interval(points)
            return (None if lo == 0 and self.rng.random() < 0.5 else lo,
                    None if self.rng.random() < 0.2 else hi)
        return self._open_interval(quarter_points(Fraction(-1), Fraction(1)))

    def box(self, space: Space) -> Tuple:
        return tuple(self.interval(space, axis) for axis in range(space.dim))

    def region(self, space: Space, max_boxes: int = 3) -> Region:
        count = int(self.rng.integers(1, max_boxes + 1))
        return Region(space, tuple(self.box(space) for _ in range(count)))

    def _sub_interval(self, interval, space: Space, axis: int):
        lo, hi = interval
        direction = space.directions[axis]
        if direction.is_circle or lo is None or hi is None or self.rng.random() < 0.5:
            return interval
        points = quarter_points(lo, hi)
        if len(points) < 2:
            return interval
        return self._open_interval(points)

    def instance(self, space: Space) -> Dict[str, Region]:
        """{'first', 'second', 'inner', 'outer'} with inner a union of sub-boxes of outer."""
        outer = self.region(space)
        inner_boxes = []
        for box in outer.boxes:
            if inner_boxes and self.rng.random() < 0.3:
                continue
            shrink_base = self.rng.random() < 0.3
            inner_boxes.append(tuple(
                self._sub_interval(interval, space, axis) if axis == 0 or shrink_base else interval
                for axis, interval in enumerate(box)))
        return {
            'first': self.region(space),
            'second': self.region(space),
            'inner': Region(space, tuple(inner_boxes)),
            'outer': outer,
        }

    def disjoint_boxes(self) -> Tuple[Region, Region, List[Tuple], List[Tuple]]:
        """
        Two bulk boxes whose spatial intervals are disjoint, with the bounded
        intervals that observables inside them are drawn from.
        """
        space = self.geometry.bulk
        spatial = quarter_points(Fraction(0), Fraction(1)) if self.geometry.is_cylinder \
            else quarter_points(Fraction(-1), Fraction(1))
        a, b, c, d = sorted(int(k) for k in self.rng.choice(len(spatial), size=4, replace=False))
        r_lo = self.geometry.inner_radius if self.geometry.is_cylinder else Fraction(0)
        taus = quarter_points(Fraction(-1), Fraction(1))
        regions, supports = [], []
        for lo, hi in ((spatial[a], spatial[b]), (spatial[c], spatial[d])):
            t_lo, t_hi = self._open_interval(taus)
            regions.append(Region(space, (((t_lo, t_hi), (lo, hi), (None, None)),)))
            supports.append([(t_lo, t_hi), (lo, hi), (r_lo, Fraction(1))])
        return regions[0], regions[1], supports[0], supports[1]


def bump_intervals(count: int, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)) -> List[Tuple[Fraction, Fraction]]:
    """Distinct sub-intervals of (lo, hi) on the eighth lattice, in a fixed order."""
    points = [lo + (hi - lo) * Fraction(k, 8) for k in range(9)]
    intervals = [(points[i], points[j]) for i in range(9) for j in range(i + 2, 9)]
    return intervals[:count]
