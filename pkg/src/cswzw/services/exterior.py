"""
Exterior calculus on product charts.

All operators act componentwise on sorted multi-indices. Fiber integration
uses the fiber-first convention: the fiber leg is moved to the front of the
multi-index before it is integrated out.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.coefficients import ONE, CoeffField, Factor
from cswzw.models.fourier import FourierPoly
from cswzw.models.form import Form, clip_support
from cswzw.models.spaces import Direction, Space
from cswzw.utils import errors

logger = logging.getLogger(__name__)


class FiberMode(Enum):
    FULL = 'full'      # integrate over the whole fiber, drop the direction
    PAST = 'past'      # x -> integral over (-inf, x]
    FUTURE = 'future'  # x -> integral over [x, inf)
    TO_END = 'to_end'  # x -> integral over [x, upper end of the direction]


def _insert_sign(index: Tuple[int, ...], axis: int) -> int:
    # Sign of moving dx_axis from the front into sorted position
    return -1 if sum(1 for i in index if i < axis) % 2 else 1


def _merge_sign(first: Tuple[int, ...], second: Tuple[int, ...]) -> int:
    inversions = sum(1 for i in first for j in second if i > j)
    return -1 if inversions % 2 else 1


def d(form: Form) -> Form:
    """De Rham differential carrying the shift sign (-1)^shift."""
    space = form.space
    if form.degree >= space.dim:
        return Form.zero(space, form.degree + 1, form.shift)
    shift_sign = -1 if form.shift % 2 else 1
    components = []
    for index, field in form.components:
        for axis in range(space.dim):
            if axis in index:
                continue
            sign = _insert_sign(index, axis) * shift_sign
            components.append((tuple(sorted(index + (axis,))), field.partial(axis).scale(sign)))
    return Form.build(space, form.degree + 1, form.shift, components, form.region)


def wedge(a: Form, b: Form, shift: Optional[int] = None) -> Form:
    if a.space != b.space:
        raise errors.SpaceMismatchError(
            errors.SPACE_MISMATCH_ERROR.format(actual=b.space.label, expected=a.space.label))
    degree = a.degree + b.degree
    shift = a.shift + b.shift if shift is None else shift
    if degree > a.space.dim:
        return Form.zero(a.space, degree, shift)
    components = []
    for first, f in a.components:
        for second, g in b.components:
            if set(first) & set(second):
                continue
            merged = tuple(sorted(first + second))
            components.append((merged, (f * g).scale(_merge_sign(first, second))))
    return Form.build(a.space, degree, shift, components, a.region)


def wedge_pairing(a: Form, b: Form) -> Form:
    """(a, b) = (-1)^{|a|} a ^ b with |a| the cohomological degree."""
    product = wedge(a, b)
    return -product if a.cdeg % 2 else product


def boundary_restrict(form: Form, target: Space) -> Form:
    """Pullback along the boundary inclusion: evaluate at the boundary value, drop the normal leg."""
    space = form.space
    if not space.has_boundary:
        raise errors.WorkbenchError(f"{space.label} has no boundary")
    axis = space.normal_axis
    value = space.boundary_value
    components = []
    for index, field in form.components:
        if axis in index:
            continue
        new_index = tuple(i if i < axis else i - 1 for i in index)
        components.append((new_index, field.collapse_axis(axis, lambda factor: factor.evaluate(value))))
    return Form.build(target, form.degree, form.shift, components)


def ext(form: Form, source, target) -> Form:
    """Extension by zero from region ``source`` into the larger region ``target``."""
    box = form.support_box()
    if box is not None:
        if not form.is_compactly_supported() or not source.covers_closed_box(box):
            raise errors.SupportError()
    if not source.is_subset(target):
        raise errors.PreconditionError(errors.NOT_AN_INCLUSION)
    return form.with_region(target)


def restrict(form: Form, region) -> Form:
    """Regard a form on a smaller open region."""
    if form.region is not None and not region.is_subset(form.region):
        raise errors.PreconditionError(errors.NOT_AN_INCLUSION)
    return form.with_region(region)


# ---- integration ----
def full_integral(factor: Factor, direction: Direction, hull: Optional[Tuple] = None):
    """Integral over the whole direction; ``hull`` cuts open ends where the summed field vanishes."""
    if isinstance(factor, FourierPoly):
        return factor.mean()
    lo, hi = direction.full_integral_bounds()
    hull = None if direction.is_circle else clip_support(hull, direction)
    if hull is not None:
        lo = hull[0] if hull[0] is not None else lo
        hi = hull[1] if hull[1] is not None else hi
    return factor.definite_integral(lo, hi)


def _require_compact(form: Form) -> None:
    for _, field in form.components:
        hulls = field.support_hulls()
        if hulls is None:
            continue
        for hull, direction in zip(hulls, form.space.directions):
            if not direction.support_admissible(clip_support(hull, direction)):
                raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction=direction.name))


def integral_series(form: Form) -> Dict[int, object]:
    """Integral of a top form as {pi power: coefficient}, orientation included."""
    space = form.space
    if form.degree != space.dim:
        return {}
    _require_compact(form)
    # the summed form vanishes off its support box, so each term may be cut to it
    box = form.support_box() or (None,) * space.dim
    series: Dict[int, object] = {}
    for _, field in form.components:
        for term in field.terms:
            value = term.coef
            for factor, direction, hull in zip(term.factors, space.directions, box):
                value = value * full_integral(factor, direction, hull)
            series[term.pi_power] = series.get(term.pi_power, 0) + value * space.orientation
    return {k: v for k, v in series.items() if v != 0}


def integrate(form: Form, arithmetic: Arithmetic = None):
    """Integral over the oriented space; 0 unless the form has top degree."""
    arithmetic = arithmetic or Arithmetic.exact()
    return arithmetic.from_pi_series(integral_series(form))


# ---- fiber integration ----
def _fiber_factor_map(mode: FiberMode, direction: Direction, hull: Optional[Tuple] = None):
    # a finite hull end of the summed field replaces the infinite one term by term
    if mode == FiberMode.PAST:
        if hull is not None and hull[0] is not None:
            start = hull[0]
            return lambda factor: -factor.integral_to(start)
        return lambda factor: factor.cumulative_from_left()
    if mode == FiberMode.FUTURE:
        if hull is not None and hull[1] is not None:
            end = hull[1]
            return lambda factor: factor.integral_to(end)
        return lambda factor: factor.cumulative_to_right()
    if mode == FiberMode.TO_END:
        if direction.hi is None:
            raise errors.WorkbenchError(f"direction {direction.name} has no upper end")
        return lambda factor: factor.integral_to(direction.hi)
    raise ValueError(f"unsupported restricted fiber mode {mode}")


def fiber_integrate(form: Form, axis: int, mode: FiberMode = FiberMode.FULL,
                    target: Space = None, shift: Optional[int] = None) -> Form:
    """
    Integrate out the leg along ``axis``. FULL drops the direction and lands
    on ``target`` with shift one lower by default; the restricted modes keep
    the space and the shift. Components without the leg map to zero.
    """
    space = form.space
    space.check_axis(axis)
    direction = space.directions[axis]
    components = []
    if mode == FiberMode.FULL:
        if target is None:
            raise ValueError("full fiber integration needs the quotient space")
        shift = form.shift - 1 if shift is None else shift
        for index, field in form.components:
            if axis not in index:
                continue
            sign = -1 if index.index(axis) % 2 else 1
            rest = tuple(i if i < axis else i - 1 for i in index if i != axis)
            hulls = field.support_hulls()
            hull = hulls[axis] if hulls is not None else None
            collapsed = field.collapse_axis(axis, lambda factor: full_integral(factor, direction, hull))
            components.append((rest, collapsed.scale(sign)))
        return Form.build(target, form.degree - 1, shift, components)
    if direction.is_circle:
        raise errors.WorkbenchError(f"restricted fiber integration along the circle {direction.name}")
    shift = form.shift if shift is None else shift
    for index, field in form.components:
        if axis not in index:
            continue
        sign = -1 if index.index(axis) % 2 else 1
        rest = tuple(i for i in index if i != axis)
        hulls = field.support_hulls()
        factor_map = _fiber_factor_map(mode, direction, hulls[axis] if hulls is not None else None)
        components.append((rest, field.transform_axis(axis, factor_map).scale(sign)))
    return Form.build(space, form.degree - 1, shift, components, form.region)


def pullback_from_base(form: Form, total: Space, axis: int = 0, shift: Optional[int] = None) -> Form:
    """Pullback along the projection forgetting ``axis``."""
    components = [(tuple(i if i < axis else i + 1 for i in index), field.insert_axis(axis, ONE))
                  for index, field in form.components]
    return Form.build(total, form.degree, form.shift if shift is None else shift, components)


def multiply(form: Form, function: CoeffField) -> Form:
    return form.map_fields(lambda field: field * function)


def translate(form: Form, s) -> Form:
    """Pullback along the adapted flow tau -> tau + s."""
    return form.map_fields(lambda field: field.transform_axis(0, lambda factor: factor.shift(s)))


def affine_pushforward(form: Form, axis: int, a, b, target: Space) -> Form:
    """
    Transport along the diffeomorphism x = a y + b on ``axis``: coefficients
    are pulled back and a leg along ``axis`` picks up the factor a.
    """
    components = []
    for index, field in form.components:
        moved = field.transform_axis(axis, lambda factor: factor.affine_pullback(a, b))
        if axis in index:
            moved = moved.scale(a)
        components.append((index, moved))
    return Form.build(target, form.degree, form.shift, components)


def collar_pushforward(form: Form, geometry) -> Form:
    """Push a tubular form into the base through rho = a r + b."""
    a, b = geometry.collar_map
    return affine_pushforward(form, 1, a, b, geometry.base)


def collar_pullback(form: Form, geometry) -> Form:
    """Inverse of ``collar_pushforward`` on forms supported in the collar."""
    a, b = geometry.collar_map
    inverse_a = Fraction(1) / a
    return affine_pushforward(form, 1, inverse_a, -b * inverse_a, geometry.tubular)


def constant_form(space: Space, index: Tuple[int, ...], value=1, shift: int = 0) -> Form:
    return Form.build(space, len(index), shift, [(index, CoeffField.constant(space.dim, value))])
