from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from cswzw.utils import errors


class DirectionKind(Enum):
    LINE = 'line'
    HALF_LINE = 'half_line'
    INTERVAL = 'interval'
    CIRCLE = 'circle'


class SpaceKind(Enum):
    BULK = 'bulk'
    BASE = 'base'
    BOUNDARY = 'boundary'
    BOUNDARY_CIRCLE = 'boundary_circle'
    TUBULAR = 'tubular'


@dataclass(frozen=True)
class Direction:
    # One adapted coordinate; lo/hi of None mean unbounded
    name: str
    kind: DirectionKind
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    lo_closed: bool = False  # lo is a boundary point of the manifold
    hi_closed: bool = False

    @classmethod
    def line(cls, name: str) -> 'Direction':
        return cls(name, DirectionKind.LINE)

    @classmethod
    def circle(cls, name: str) -> 'Direction':
        return cls(name, DirectionKind.CIRCLE, Fraction(0), Fraction(1))

    @property
    def is_circle(self) -> bool:
        return self.kind == DirectionKind.CIRCLE

    @property
    def domain(self) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        return (self.lo, self.hi)

    def full_integral_bounds(self) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        return (self.lo, self.hi)

    def support_admissible(self, support: Optional[Tuple]) -> bool:
        """Compact support inside this direction (open ends need strict room)."""
        if support is None or self.is_circle:
            return True
        lo, hi = support
        if self.lo is None and lo is None:
            return False
        if self.hi is None and hi is None:
            return False
        if self.lo is not None and not self.lo_closed and (lo is None or lo <= self.lo):
            return False
        if self.hi is not None and not self.hi_closed and (hi is None or hi >= self.hi):
            return False
        return True


@dataclass(frozen=True)
class Space:
    kind: SpaceKind
    directions: Tuple[Direction, ...]
    orientation: int = 1
    normal_axis: Optional[int] = None  # axis whose closed end is the boundary
    boundary_value: Optional[Fraction] = None
    label: str = ''

    @property
    def dim(self) -> int:
        return len(self.directions)

    @property
    def names(self) -> List[str]:
        return [d.name for d in self.directions]

    @property
    def domains(self) -> List[Tuple]:
        return [d.domain for d in self.directions]

    @property
    def has_boundary(self) -> bool:
        return self.normal_axis is not None

    def axis(self, name: str) -> int:
        for i, direction in enumerate(self.directions):
            if direction.name == name:
                return i
        raise errors.WorkbenchError(errors.MISSING_DIRECTION_ERROR.format(direction=name, space=self.label))

    def check_axis(self, axis: int) -> int:
        if not 0 <= axis < self.dim:
            raise errors.WorkbenchError(errors.MISSING_DIRECTION_ERROR.format(direction=axis, space=self.label))
        return axis

    def quotient(self, axis: int, kind: SpaceKind, label: str) -> 'Space':
        """
        Space of fibers along ``axis``. The orientation is fiber-first:
        [dx_axis ^ o_quotient] = o_total.
        """
        self.check_axis(axis)
        # moving dx_axis to the front costs (-1)^axis
        orientation = self.orientation * (-1) ** axis
        normal = self.normal_axis
        if normal is not None:
            normal = None if normal == axis else (normal - 1 if normal > axis else normal)
        directions = self.directions[:axis] + self.directions[axis + 1:]
        return Space(kind, directions, orientation, normal,
                     self.boundary_value if normal is not None else None, label)

    def relabel(self, **changes) -> 'Space':
        return replace(self, **changes)
