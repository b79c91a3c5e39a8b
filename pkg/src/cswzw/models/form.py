"""
Graded differential forms in adapted coordinates.

A form of de Rham degree p carries one coefficient field per sorted
multi-index I of p axes, meaning sum_I f_I dx^I. ``shift`` records the
position of the form inside a shifted complex, so its cohomological degree
is ``degree - shift``.
"""

from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Tuple

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.coefficients import CoeffField
from cswzw.models.spaces import Space
from cswzw.utils import errors

Index = Tuple[int, ...]


@dataclass(frozen=True)
class Form:
    space: Space
    degree: int
    shift: int = 0
    components: Tuple[Tuple[Index, CoeffField], ...] = ()
    region: Optional[object] = None  # Region the form is regarded on, if any

    @classmethod
    def build(cls, space: Space, degree: int, shift: int,
              components: Iterable[Tuple[Index, CoeffField]], region=None) -> 'Form':
        merged: Dict[Index, CoeffField] = {}
        for index, field in components:
            index = tuple(index)
            if len(index) != degree:
                raise errors.DegreeError(errors.DEGREE_ERROR.format(expected=degree, actual=len(index)))
            if list(index) != sorted(set(index)):
                raise ValueError(f"multi-index {index} must be strictly increasing")
            if index and (index[0] < 0 or index[-1] >= space.dim):
                raise errors.DegreeError(errors.INDEX_RANGE_ERROR.format(index=index, top=space.dim - 1,
                                                                        space=space.label))
            merged[index] = merged[index] + field if index in merged else field
        kept = tuple(sorted((i, f) for i, f in merged.items() if not f.is_empty()))
        return cls(space, degree, shift, kept, region)

    @classmethod
    def zero(cls, space: Space, degree: int, shift: int = 0) -> 'Form':
        return cls(space, degree, shift, ())

    @classmethod
    def scalar_function(cls, space: Space, field: CoeffField, shift: int = 0) -> 'Form':
        return cls.build(space, 0, shift, [((), field)])

    @property
    def cdeg(self) -> int:
        return self.degree - self.shift

    @property
    def indices(self) -> List[Index]:
        return [i for i, _ in self.components]

    def component(self, index: Index) -> CoeffField:
        for i, f in self.components:
            if i == tuple(index):
                return f
        return CoeffField.zero(self.space.dim)

    def with_shift(self, shift: int) -> 'Form':
        return replace(self, shift=shift)

    def with_region(self, region) -> 'Form':
        return replace(self, region=region)

    def on_space(self, space: Space) -> 'Form':
        return replace(self, space=space)

    def _check_compatible(self, other: 'Form') -> None:
        if self.space != other.space:
            raise errors.SpaceMismatchError(
                errors.SPACE_MISMATCH_ERROR.format(actual=other.space.label, expected=self.space.label))
        if self.degree != other.degree or self.shift != other.shift:
            raise errors.DegreeError(errors.DEGREE_BOOKKEEPING_ERROR.format(
                detail=f"({self.degree}, shift {self.shift}) vs ({other.degree}, shift {other.shift})"))

    def __add__(self, other: 'Form') -> 'Form':
        self._check_compatible(other)
        return Form.build(self.space, self.degree, self.shift,
                          list(self.components) + list(other.components), self.region)

    def __neg__(self) -> 'Form':
        return self.scale(-1)

    def __sub__(self, other: 'Form') -> 'Form':
        return self + (-other)

    def scale(self, c) -> 'Form':
        return Form.build(self.space, self.degree, self.shift,
                          [(i, f.scale(c)) for i, f in self.components], self.region)

    def map_fields(self, fn) -> 'Form':
        return Form.build(self.space, self.degree, self.shift,
                          [(i, fn(f)) for i, f in self.components], self.region)

    # ---- support ----
    def support_box(self, tolerance: float = 0.0) -> Optional[Tuple[Optional[Tuple], ...]]:
        """Per-axis closed hull of the support (None per axis: unbounded); None if zero."""
        box = None
        for _, f in self.components:
            hulls = f.support_hulls(tolerance)
            if hulls is None:
                continue
            if box is None:
                box = list(hulls)
                continue
            box = [(None if a[0] is None or b[0] is None else min(a[0], b[0]),
                    None if a[1] is None or b[1] is None else max(a[1], b[1])) for a, b in zip(box, hulls)]
        if box is None:
            return None
        return tuple(clip_support(h, d) for h, d in zip(box, self.space.directions))

    def is_compactly_supported(self, tolerance: float = 0.0) -> bool:
        # decided on each summed component, so cancelling tails are compact
        for _, f in self.components:
            hulls = f.support_hulls(tolerance)
            if hulls is None:
                continue
            for hull, direction in zip(hulls, self.space.directions):
                if not direction.support_admissible(clip_support(hull, direction)):
                    return False
        return True

    # ---- zero testing ----
    def residual(self, arithmetic: Arithmetic = None) -> float:
        domains = self.space.domains
        return max((f.residual(domains, arithmetic) for _, f in self.components), default=0.0)

    def is_zero(self, arithmetic: Arithmetic = None) -> bool:
        arithmetic = arithmetic or Arithmetic.exact()
        return arithmetic.within_tolerance(self.residual(arithmetic))


def clip_support(support: Optional[Tuple], direction) -> Optional[Tuple]:
    # Intersect a support hull with the direction's domain
    if support is None:
        return None
    if direction.is_circle:
        return _clip_circle(support)
    lo, hi = support
    if direction.lo is not None:
        lo = direction.lo if lo is None else max(lo, direction.lo)
        if hi is not None and hi < direction.lo:
            return None
    if direction.hi is not None:
        hi = direction.hi if hi is None else min(hi, direction.hi)
        if lo is not None and lo > direction.hi:
            return None
    return (lo, hi)


def _clip_circle(support: Tuple) -> Tuple:
    lo, hi = support
    if lo is None or hi is None:
        return (None, None)
    return (lo, hi)
