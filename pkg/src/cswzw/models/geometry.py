"""
The two worked geometries in flow-adapted coordinates.

Half-space M = R^2 x R>=0, physical (t, x, r), adapted tau = t + eps x,
u = x - eps t. Filled cylinder truncated to the annulus r0 < r <= 1,
physical (t, phi, r), adapted tau = 2t, chi = phi - eps r t (mod 1).
In both charts the chiral flow is tau -> tau + s.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Tuple

from cswzw.models.spaces import Direction, DirectionKind, Space, SpaceKind

DEFAULT_INNER_RADIUS = Fraction(1, 4)


class GeometryKind(Enum):
    HALF_SPACE = 'half_space'
    CYLINDER = 'cylinder'


class Chirality(Enum):
    PLUS = '+'
    MINUS = '-'

    @property
    def sign(self) -> int:
        return 1 if self == Chirality.PLUS else -1


class Pointing(Enum):
    NE = 'NE'
    NW = 'NW'
    SW = 'SW'
    SE = 'SE'
    NOT_NULL = 'NotNull'

    @property
    def antipode(self) -> 'Pointing':
        return _ANTIPODES[self]


_ANTIPODES = {
    Pointing.NE: Pointing.SW,
    Pointing.SW: Pointing.NE,
    Pointing.NW: Pointing.SE,
    Pointing.SE: Pointing.NW,
    Pointing.NOT_NULL: Pointing.NOT_NULL,
}


@dataclass(frozen=True)
class FlowSpec:
    kind: GeometryKind
    epsilon: int

    def physical_to_adapted(self, point: Tuple) -> Tuple:
        t, x, r = point
        if self.kind == GeometryKind.HALF_SPACE:
            return (t + self.epsilon * x, x - self.epsilon * t, r)
        return (2 * t, (x - self.epsilon * r * t) % 1, r)

    def adapted_to_physical(self, point: Tuple) -> Tuple:
        tau, y, r = point
        if self.kind == GeometryKind.HALF_SPACE:
            return (Fraction(tau - self.epsilon * y) / 2, Fraction(y + self.epsilon * tau) / 2, r)
        t = Fraction(tau) / 2
        return (t, (y + self.epsilon * r * t) % 1, r)

    def flow_physical(self, s, point: Tuple) -> Tuple:
        t, x, r = point
        half = Fraction(s) / 2
        if self.kind == GeometryKind.HALF_SPACE:
            return (t + half, x + self.epsilon * half, r)
        return (t + half, (x + self.epsilon * r * half) % 1, r)

    def flow_adapted(self, s, point: Tuple) -> Tuple:
        return (point[0] + s,) + tuple(point[1:])


@dataclass(frozen=True)
class Geometry:
    kind: GeometryKind = GeometryKind.CYLINDER
    chirality: Chirality = Chirality.PLUS
    inner_radius: Fraction = DEFAULT_INNER_RADIUS

    @classmethod
    def from_names(cls, kind: str, chirality: str, inner_radius=DEFAULT_INNER_RADIUS) -> 'Geometry':
        return cls(GeometryKind(kind), Chirality(chirality), Fraction(inner_radius))

    @property
    def epsilon(self) -> int:
        # +1 exactly for the + chirality
        return self.chirality.sign

    @property
    def is_cylinder(self) -> bool:
        return self.kind == GeometryKind.CYLINDER

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.chirality.value}"

    @property
    def flow(self) -> FlowSpec:
        return FlowSpec(self.kind, self.epsilon)

    @property
    def boundary_value(self) -> Fraction:
        return Fraction(1) if self.is_cylinder else Fraction(0)

    def _spatial(self) -> Direction:
        return Direction.circle('chi') if self.is_cylinder else Direction.line('u')

    def _radial(self) -> Direction:
        if self.is_cylinder:
            return Direction('r', DirectionKind.INTERVAL, self.inner_radius, Fraction(1), hi_closed=True)
        return Direction('r', DirectionKind.HALF_LINE, Fraction(0), None, lo_closed=True)

    @cached_property
    def bulk(self) -> Space:
        orientation = 1 if self.is_cylinder else -1
        return Space(SpaceKind.BULK, (Direction.line('tau'), self._spatial(), self._radial()),
                     orientation, 2, self.boundary_value, 'M')

    @cached_property
    def boundary(self) -> Space:
        return Space(SpaceKind.BOUNDARY, (Direction.line('tau'), self._spatial()), 1, None, None, 'dM')

    @cached_property
    def base(self) -> Space:
        return self.bulk.quotient(0, SpaceKind.BASE, 'B')

    @cached_property
    def boundary_circle(self) -> Space:
        return self.boundary.quotient(0, SpaceKind.BOUNDARY_CIRCLE, 'dB')

    @cached_property
    def tubular(self) -> Space:
        # the collar coordinate along dB is the boundary circle's own coordinate
        rho = Direction('rho', DirectionKind.INTERVAL, Fraction(0), Fraction(1), lo_closed=True)
        # transported from the base orientation along the collar embedding
        return Space(SpaceKind.TUBULAR, (self._spatial(), rho), -1, 1, Fraction(0), 'dBx[0,1)')

    def boundary_of(self, space: Space) -> Space:
        """Target space of the pullback to the boundary of ``space``."""
        if space.kind == SpaceKind.BULK:
            return self.boundary
        if space.kind in (SpaceKind.BASE, SpaceKind.TUBULAR):
            return self.boundary_circle
        raise ValueError(f"{space.label} has no boundary")

    def space(self, kind: SpaceKind) -> Space:
        return {
            SpaceKind.BULK: self.bulk,
            SpaceKind.BOUNDARY: self.boundary,
            SpaceKind.BASE: self.base,
            SpaceKind.BOUNDARY_CIRCLE: self.boundary_circle,
            SpaceKind.TUBULAR: self.tubular,
        }[kind]

    # ---- boundary Lorentzian data in adapted coordinates ----
    @property
    def star_matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Row i holds the adapted components of *(dx_i) for (dtau, d<spatial>)."""
        e = self.epsilon
        if self.is_cylinder:
            return ((-e, -2), (0, e))
        return ((-e, 0), (0, e))

    @property
    def coframe_components(self) -> Tuple[int, int]:
        # beta = dchi on the cylinder, beta = -eps du on the half-space
        return (0, 1) if self.is_cylinder else (0, -self.epsilon)

    @property
    def collar_map(self) -> Tuple[Fraction, Fraction]:
        """(a, b) with rho = a r + b on the base collar."""
        if self.is_cylinder:
            width = 1 - self.inner_radius
            return (Fraction(-1) / width, Fraction(1) / width)
        return (Fraction(1), Fraction(0))

    def to_dict(self) -> dict:
        return {
            'geometry': self.kind.value,
            'chirality': self.chirality.value,
            'inner_radius': str(self.inner_radius),
        }
