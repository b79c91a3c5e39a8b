"""
Region predicates of the orthogonal category: future/past sets along the
flow, convexity, disjointness, Cauchy inclusions and the projection /
preimage functors of the localization.

Everything works on the cell decomposition of models.region; the flow is
translation along axis 0 (tau) of bulk and boundary spaces.
"""

import logging
from typing import Optional, Tuple

from cswzw.models.region import Box, Region
from cswzw.models.spaces import Space, SpaceKind
from cswzw.utils import errors

logger = logging.getLogger(__name__)

TAU = 0

_QUOTIENTS = {
    SpaceKind.BULK: (SpaceKind.BASE, 'B'),
    SpaceKind.BOUNDARY: (SpaceKind.BOUNDARY_CIRCLE, 'dB'),
}


def _require_flow_space(region: Region) -> None:
    if region.space.kind not in _QUOTIENTS:
        raise errors.SpaceMismatchError(
            errors.SPACE_MISMATCH_ERROR.format(actual=region.space.label, expected='M or dM'))


def quotient_space(space: Space) -> Space:
    kind, label = _QUOTIENTS[space.kind]
    return space.quotient(TAU, kind, label)


def j_sets(region: Region) -> Tuple[Region, Region]:
    """(J_up, J_down): every box extended to +inf (resp. -inf) in tau."""
    _require_flow_space(region)
    future = tuple(((box[TAU][0], None),) + box[1:] for box in region.boxes)
    past = tuple(((None, box[TAU][1]),) + box[1:] for box in region.boxes)
    return Region(region.space, future), Region(region.space, past)


def _tau_sections(region: Region, extra=None):
    """Covered tau-cell indices grouped by base cell."""
    cells = region.cells(extra)
    covered = region.covered(cells)
    sections = {}
    for idx in covered:
        sections.setdefault(idx[1:], []).append(idx[TAU])
    return cells, sections


def is_convex(region: Region) -> bool:
    """Every tau-section is a single interval of cells."""
    _require_flow_space(region)
    _, sections = _tau_sections(region)
    for taus in sections.values():
        ordered = sorted(taus)
        if ordered[-1] - ordered[0] + 1 != len(ordered):
            return False
    return True


def image(region: Region) -> Region:
    """Projection along the flow onto the quotient."""
    _require_flow_space(region)
    return region.project(TAU, quotient_space(region.space))


def preimage(base_region: Region, total: Space) -> Region:
    return Region.preimage(base_region, total, TAU)


def is_disjoint(first: Region, second: Region) -> bool:
    """No orbit meets both regions, i.e. the projections do not intersect."""
    if first.space != second.space:
        raise errors.SpaceMismatchError(
            errors.SPACE_MISMATCH_ERROR.format(actual=second.space.label, expected=first.space.label))
    return not image(first).intersects(image(second))


def is_cauchy(inner: Region, outer: Region) -> bool:
    if not inner.is_subset(outer):
        raise errors.PreconditionError(errors.NOT_AN_INCLUSION)
    if not is_convex(inner) or not is_convex(outer):
        raise errors.PreconditionError(errors.REGION_NOT_CONVEX)
    return image(inner).same_set(image(outer))


def localization_functors(region: Region) -> Tuple[Region, Region]:
    """(projection of the region, preimage of that projection)."""
    projected = image(region)
    return projected, preimage(projected, region.space)


def unit_holds(region: Region) -> bool:
    # U is contained in the preimage of its projection
    _, saturated = localization_functors(region)
    return region.is_subset(saturated)


def counit_holds(base_region: Region, total: Space) -> bool:
    return image(preimage(base_region, total)).same_set(base_region)


# ---- closed boxes ----
ClosedBox = Tuple[Tuple[Optional[object], Optional[object]], ...]


def closed_j_sets(box: ClosedBox) -> Tuple[ClosedBox, ClosedBox]:
    """
    Future and past of a compact box. Both are again products of closed
    intervals (None marks an unbounded end), so they are closed sets.
    """
    (lo, hi), rest = box[TAU], tuple(box[1:])
    return ((lo, None),) + rest, ((None, hi),) + rest


def is_closed_box(box: ClosedBox, space: Space) -> bool:
    # Finite ends are attained; unbounded ends only where the direction is unbounded
    for (lo, hi), direction in zip(box, space.directions):
        if direction.is_circle:
            continue
        if lo is None and direction.lo is not None:
            return False
        if hi is None and direction.hi is not None:
            return False
    return True


def future_within_past_of_section(box: ClosedBox, section_tau) -> Optional[ClosedBox]:
    """J_up(K) meets J_down({tau = s}) in a box; None when empty."""
    if box[TAU][0] is None:
        raise errors.PreconditionError(errors.UNBOUNDED_PAST)
    future, _ = closed_j_sets(box)
    lo = future[TAU][0]
    if lo > section_tau:
        return None
    return ((lo, section_tau),) + tuple(future[1:])


def box_is_bounded(box: ClosedBox, space: Space) -> bool:
    for (lo, hi), direction in zip(box, space.directions):
        if direction.is_circle:
            continue
        if (lo is None and direction.lo is None) or (hi is None and direction.hi is None):
            return False
    return True


def box_region(space: Space, box: Box) -> Region:
    return Region(space, (tuple(box),))

