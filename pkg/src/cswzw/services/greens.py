"""
Retarded and advanced Green's homotopies of the chiral flow.

In adapted coordinates the flow is tau-translation, so

    G_up(f dtau ^ phi) = (int_{-inf}^{tau} f) phi
    G_down(f dtau ^ phi) = -(int_{tau}^{inf} f) phi

and forms without a dtau leg are sent to zero. On a form sitting in a
k-shifted complex the operator carries the sign (-1)^k.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.complexes import ComplexId, ComplexTag, HomCochain
from cswzw.models.form import Form, clip_support
from cswzw.models.geometry import Geometry
from cswzw.models.report import CheckRecord
from cswzw.models.spaces import SpaceKind
from cswzw.services import exterior
from cswzw.services.exterior import FiberMode
from cswzw.services.homotopy import member, operator_boundary
from cswzw.utils import errors

logger = logging.getLogger(__name__)

TAU = 0

# Field complexes the operators act on when no narrower tag is given
FIELD_TAGS = {SpaceKind.BULK: ComplexTag.F_M, SpaceKind.BOUNDARY: ComplexTag.F_BD}


class GreensDirection(Enum):
    FORWARD = 'up'
    BACKWARD = 'down'


def _require_vertical_compactness(form: Form) -> None:
    direction = form.space.directions[TAU]
    for _, field in form.components:
        hulls = field.support_hulls()
        if hulls is not None and not direction.support_admissible(clip_support(hulls[TAU], direction)):
            raise errors.SupportError(errors.NON_COMPACT_ERROR.format(direction=direction.name))


def greens_apply(direction: GreensDirection, form: Form) -> Form:
    _require_vertical_compactness(form)
    shift_sign = -1 if form.shift % 2 else 1
    if direction == GreensDirection.FORWARD:
        result = exterior.fiber_integrate(form, TAU, FiberMode.PAST)
        return result.scale(shift_sign) if shift_sign < 0 else result
    result = exterior.fiber_integrate(form, TAU, FiberMode.FUTURE)
    return result if shift_sign < 0 else -result


def projection_pushforward(geometry: Geometry, form: Form, shift: int = None) -> Form:
    """Integration along the full flow lines, landing on the quotient."""
    target = geometry.base if form.space.kind == SpaceKind.BULK else geometry.boundary_circle
    return exterior.fiber_integrate(form, TAU, FiberMode.FULL, target, shift)


def projection_pullback(geometry: Geometry, form: Form, shift: int = None) -> Form:
    total = geometry.bulk if form.space.kind == SpaceKind.BASE else geometry.boundary
    return exterior.pullback_from_base(form, total, TAU, shift)


@dataclass(frozen=True)
class GreensHomotopy:
    geometry: Geometry
    direction: GreensDirection
    space_kind: SpaceKind = SpaceKind.BULK
    complex_tag: Optional[ComplexTag] = None

    @property
    def name(self) -> str:
        return f"G_{self.direction.value}"

    @property
    def tag(self) -> ComplexTag:
        return self.complex_tag or FIELD_TAGS[self.space_kind]

    @property
    def source(self) -> ComplexId:
        return ComplexId.of(self.tag, space_kind=self.space_kind)

    def __call__(self, form: Form) -> Form:
        return greens_apply(self.direction, form)

    def as_cochain(self) -> HomCochain:
        return HomCochain(self.name, -1, self, self.source, self.source)

    def narrowed(self, tag: ComplexTag) -> 'GreensHomotopy':
        return GreensHomotopy(self.geometry, self.direction, self.space_kind, tag)

    def support_contained(self, form: Form) -> bool:
        """Support box of G(form) inside the future (past) set of the input's support box."""
        box_in = form.support_box()
        image = self(form)
        box_out = image.support_box()
        if box_in is None or box_out is None:
            return True
        tau_in, tau_out = box_in[TAU], box_out[TAU]
        if self.direction == GreensDirection.FORWARD:
            if tau_out[0] is None or tau_out[0] < tau_in[0]:
                return False
        else:
            if tau_out[1] is None or tau_out[1] > tau_in[1]:
                return False
        for axis in range(1, form.space.dim):
            (lo_in, hi_in), (lo_out, hi_out) = box_in[axis], box_out[axis]
            if lo_in is not None and (lo_out is None or lo_out < lo_in):
                return False
            if hi_in is not None and (hi_out is None or hi_out > hi_in):
                return False
        return True


def greens_pair(geometry: Geometry, space_kind: SpaceKind = SpaceKind.BULK,
                tag: Optional[ComplexTag] = None):
    return (GreensHomotopy(geometry, GreensDirection.FORWARD, space_kind, tag),
            GreensHomotopy(geometry, GreensDirection.BACKWARD, space_kind, tag))


def causal_propagator(geometry: Geometry, space_kind: SpaceKind = SpaceKind.BULK) -> HomCochain:
    up, down = greens_pair(geometry, space_kind)
    return up.as_cochain() - down.as_cochain()


# ---- verification ----
def verify_homotopy_identity(green: GreensHomotopy, samples: Sequence[Form],
                             arithmetic: Arithmetic = None, prefix: str = 's') -> List[CheckRecord]:
    """dG + Gd - j on each sample; j is the inclusion of compact supports."""
    arithmetic = arithmetic or Arithmetic.exact()
    boundary = operator_boundary(green.as_cochain())
    records = []
    for i, form in enumerate(samples):
        residual = (boundary(form) - form).residual(arithmetic)
        records.append(CheckRecord(f"d{green.name} = j", f"{prefix}{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


def verify_difference_identity(geometry: Geometry, samples: Sequence[Form],
                               arithmetic: Arithmetic = None, prefix: str = 's') -> List[CheckRecord]:
    """G_up - G_down = pi^* pi_* (with the shift sign of the samples)."""
    arithmetic = arithmetic or Arithmetic.exact()
    records = []
    for i, form in enumerate(samples):
        up, down = greens_pair(geometry, form.space.kind)
        difference = up(form) - down(form)
        pushed = projection_pushforward(geometry, form)
        expected = projection_pullback(geometry, pushed, form.shift)
        if form.shift % 2:
            expected = -expected
        residual = (difference - expected).residual(arithmetic)
        records.append(CheckRecord("G_up - G_down = pi^* pi_*", f"{prefix}{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


def restrict_to_boundary_condition(green: GreensHomotopy):
    """The same operator regarded on the conditioned complexes (bulk F_L, boundary L)."""
    if green.space_kind == SpaceKind.BULK:
        return green.narrowed(ComplexTag.F_L_M)
    return green.narrowed(ComplexTag.L)


def verify_preserves_condition(green: GreensHomotopy, samples: Sequence[Form],
                               arithmetic: Arithmetic = None, prefix: str = 's') -> List[CheckRecord]:
    arithmetic = arithmetic or Arithmetic.exact()
    narrowed = restrict_to_boundary_condition(green)
    records = []
    for i, form in enumerate(samples):
        image = narrowed(form)
        ok = member(green.geometry, narrowed.source, image, arithmetic)
        detail = {} if ok else {'degree': image.degree}
        records.append(CheckRecord(f"{green.name} preserves {narrowed.tag.value}", f"{prefix}{i}",
                                   0.0 if ok else 1.0, ok, detail))
    return records


def verify_bulk_boundary_compatibility(geometry: Geometry, direction: GreensDirection,
                                       samples: Sequence[Form], arithmetic: Arithmetic = None,
                                       prefix: str = 's') -> List[CheckRecord]:
    """i^* G_bulk = G_boundary i^*"""
    arithmetic = arithmetic or Arithmetic.exact()
    bulk = GreensHomotopy(geometry, direction, SpaceKind.BULK)
    boundary = GreensHomotopy(geometry, direction, SpaceKind.BOUNDARY)
    records = []
    for i, form in enumerate(samples):
        left = exterior.boundary_restrict(bulk(form), geometry.boundary)
        right = boundary(exterior.boundary_restrict(form, geometry.boundary))
        residual = (left - right).residual(arithmetic)
        records.append(CheckRecord(f"i^* {bulk.name} = {boundary.name} i^*", f"{prefix}{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records
