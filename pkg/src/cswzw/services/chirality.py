"""
Lorentzian data on the boundary: null pointings, the Hodge star on 1-forms,
the self-dual projectors and the flow-invariant chiral coframe.
"""

from fractions import Fraction
from typing import Sequence, Tuple

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.coefficients import CoeffField
from cswzw.models.form import Form
from cswzw.models.geometry import Geometry, Pointing
from cswzw.models.spaces import SpaceKind
from cswzw.utils import errors

HALF = Fraction(1, 2)


def classify_pointing(geometry: Geometry, point: Sequence, vector: Sequence) -> Pointing:
    """
    Pointing of a tangent vector (v_t, v_x) at a physical boundary point
    (t, x, r). The boundary metric is -dt^2 + dx^2, time-oriented by d/dt,
    oriented by dt ^ dx.
    """
    if point[2] != geometry.boundary_value:
        raise errors.PreconditionError(
            errors.NOT_ON_BOUNDARY.format(point=tuple(point), value=geometry.boundary_value))
    v_t, v_x = vector
    if v_t == 0 and v_x == 0:
        raise errors.DegenerateVectorError()
    if -v_t * v_t + v_x * v_x != 0:
        return Pointing.NOT_NULL
    time_component = -v_t   # g(d/dt, v)
    orientation_component = v_x  # (dt ^ dx)(d/dt, v)
    if time_component < 0:
        return Pointing.NE if orientation_component > 0 else Pointing.NW
    return Pointing.SE if orientation_component > 0 else Pointing.SW


def _check_boundary_one_form(form: Form) -> None:
    if form.space.kind != SpaceKind.BOUNDARY:
        raise errors.SpaceMismatchError(
            errors.SPACE_MISMATCH_ERROR.format(actual=form.space.label, expected='dM'))
    if form.degree != 1:
        raise errors.DegreeError(errors.DEGREE_ERROR.format(expected=1, actual=form.degree))


def hodge_star_boundary(geometry: Geometry, form: Form) -> Form:
    _check_boundary_one_form(form)
    star = geometry.star_matrix
    dim = form.space.dim
    images = {0: CoeffField.zero(dim), 1: CoeffField.zero(dim)}
    for (axis,), field in form.components:
        for target in (0, 1):
            if star[axis][target]:
                images[target] = images[target] + field.scale(star[axis][target])
    return Form.build(form.space, 1, form.shift, [((k,), f) for k, f in images.items()], form.region)


def sd_projectors(geometry: Geometry, form: Form) -> Tuple[Form, Form]:
    """(self-dual part, anti-self-dual part) = ((a + *a)/2, (a - *a)/2)."""
    starred = hodge_star_boundary(geometry, form)
    return (form + starred).scale(HALF), (form - starred).scale(HALF)


def chiral_part(geometry: Geometry, form: Form) -> Tuple[Form, Form]:
    """(part in the chiral eigenspace, complementary part) for the geometry's chirality."""
    self_dual, anti_self_dual = sd_projectors(geometry, form)
    if geometry.epsilon > 0:
        return self_dual, anti_self_dual
    return anti_self_dual, self_dual


def invariant_chiral_coframe(geometry: Geometry, shift: int = 0) -> Form:
    """Nowhere-vanishing 1-form with *beta = eps beta, invariant under the flow."""
    space = geometry.boundary
    components = [((axis,), CoeffField.constant(space.dim, c))
                  for axis, c in enumerate(geometry.coframe_components) if c]
    return Form.build(space, 1, shift, components)


def physical_one_form(geometry: Geometry, c_t, c_x, shift: int = 0) -> Form:
    """The boundary 1-form c_t dt + c_x dx (dphi on the cylinder) in adapted coordinates."""
    e = geometry.epsilon
    if geometry.is_cylinder:
        # dt = dtau/2, dphi = dchi + eps dtau/2
        tau_part = c_t * HALF + c_x * e * HALF
        spatial_part = c_x
    else:
        # dt = (dtau - eps du)/2, dx = (eps dtau + du)/2
        tau_part = (c_t + e * c_x) * HALF
        spatial_part = (c_x - e * c_t) * HALF
    space = geometry.boundary
    components = [((axis,), CoeffField.constant(space.dim, c))
                  for axis, c in ((0, tau_part), (1, spatial_part)) if c]
    return Form.build(space, 1, shift, components)


def chiral_residual(geometry: Geometry, form: Form, arithmetic: Arithmetic = None) -> float:
    """How far a boundary 1-form is from the chiral eigenspace *a = eps a."""
    _check_boundary_one_form(form)
    starred = hodge_star_boundary(geometry, form)
    return (starred - form.scale(geometry.epsilon)).residual(arithmetic)
