"""
Complex-level calculus: membership in the named complexes, the operator
differential dL - (-1)^{|L|} L d evaluated on samples, coordinates of forms
in a common basis, and exact cohomology of small basis-closed complexes.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy
import sympy

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.coefficients import CoeffField
from cswzw.models.complexes import ComplexId, HomCochain
from cswzw.models.form import Form
from cswzw.models.fourier import FourierPoly
from cswzw.models.geometry import Geometry
from cswzw.services import exterior
from cswzw.utils import errors

logger = logging.getLogger(__name__)


# ---- differentials and membership ----
def complex_differential(complex_id: Optional[ComplexId]) -> Callable[[Form], Form]:
    if complex_id is not None and not complex_id.rules.has_differential:
        return lambda form: Form.zero(form.space, form.degree + 1, form.shift)
    return exterior.d


def _boundary_value_zero(geometry: Geometry, form: Form, arithmetic: Arithmetic) -> bool:
    restricted = exterior.boundary_restrict(form, geometry.boundary_of(form.space))
    return restricted.is_zero(arithmetic)


def _has_no_tau_leg(form: Form, arithmetic: Arithmetic) -> bool:
    # On the boundary a 1-form lies in the chiral eigenspace iff it has no dtau leg
    return form.component((0,)).residual(form.space.domains, arithmetic) <= arithmetic.tolerance


def member(geometry: Geometry, complex_id: ComplexId, form: Form, arithmetic: Arithmetic = None) -> bool:
    arithmetic = arithmetic or Arithmetic.exact()
    if form.space.kind != complex_id.space_kind:
        raise errors.SpaceMismatchError(
            errors.SPACE_MISMATCH_ERROR.format(actual=form.space.label, expected=complex_id.space_kind.value))
    rules = complex_id.rules
    if form.shift != rules.shift:
        raise errors.DegreeError(errors.DEGREE_BOOKKEEPING_ERROR.format(
            detail=f"shift {form.shift} in {complex_id.label}, expected {rules.shift}"))
    if form.degree < 0 or form.degree > form.space.dim:
        return form.is_zero(arithmetic)
    if rules.degrees is not None and form.degree not in rules.degrees:
        return form.is_zero(arithmetic)
    if rules.compact:
        if not form.is_compactly_supported(arithmetic.tolerance):
            return False
        box = form.support_box(arithmetic.tolerance)
        if complex_id.region is not None and box is not None and not complex_id.region.covers_closed_box(box):
            return False
    if rules.conditioned:
        if form.degree == 0 and not _boundary_value_zero(geometry, form, arithmetic):
            return False
        if form.degree == 1:
            restricted = exterior.boundary_restrict(form, geometry.boundary)
            if not _has_no_tau_leg(restricted, arithmetic):
                return False
    if rules.chiral:
        if form.degree == 0 and not form.is_zero(arithmetic):
            return False
        if form.degree == 1 and not _has_no_tau_leg(form, arithmetic):
            return False
    if rules.vanish_on_boundary and form.degree == 0:
        if not _boundary_value_zero(geometry, form, arithmetic):
            return False
    return True


# ---- operator differential ----
def operator_boundary(h: HomCochain, source: ComplexId = None, target: ComplexId = None) -> HomCochain:
    """The operator dL - (-1)^{|L|} L d, with the differentials of source and target."""
    source = source or h.source
    target = target or h.target
    d_source = complex_differential(source)
    d_target = complex_differential(target)
    sign = -1 if h.degree % 2 else 1

    def action(form: Form) -> Form:
        image = h(form)
        if image.cdeg != form.cdeg + h.degree:
            raise errors.DegreeError(errors.DEGREE_BOOKKEEPING_ERROR.format(
                detail=f"{h.name} sent degree {form.cdeg} to {image.cdeg}, expected {form.cdeg + h.degree}"))
        return d_target(image) - h(d_source(form)).scale(sign)

    return HomCochain(f"d[{h.name}]", h.degree + 1, action, source, target)


def boundary_op(h: HomCochain, samples: Sequence[Form],
                source: ComplexId = None, target: ComplexId = None) -> List[Form]:
    boundary = operator_boundary(h, source, target)
    return [boundary(form) for form in samples]


# ---- coordinates ----
def _common_grids(forms: Sequence[Form]) -> List[List]:
    dim = forms[0].space.dim
    grids = [set() for _ in range(dim)]
    for form in forms:
        for _, field in form.components:
            for axis in range(dim):
                grids[axis].update(field.knots(axis))
    return [sorted(g) for g in grids]


def form_coordinates(forms: Sequence[Form]) -> Tuple[List[Tuple], List[Dict[Tuple, object]]]:
    """
    Coordinates of forms of one degree in a common basis. Values are exact
    sympy numbers with the pi powers folded in, so spans are solved over Q(pi).
    """
    if not forms:
        return [], []
    grids = _common_grids(forms)
    domains = forms[0].space.domains
    rows = []
    keys = set()
    for form in forms:
        coords: Dict[Tuple, object] = {}
        for index, field in form.components:
            expansion = field.consolidated().expansion(grids, domains)
            for key, value in expansion.items():
                base_key = (index,) + key[:-1]
                coords[base_key] = coords.get(base_key, 0) + _as_sympy(value) * sympy.pi ** key[-1]
        coords = {k: v for k, v in coords.items() if sympy.expand(v) != 0}
        keys.update(coords)
        rows.append(coords)
    return sorted(keys, key=repr), rows


def _as_sympy(value):
    if isinstance(value, float):
        return sympy.Float(value)
    return sympy.Rational(value.numerator, value.denominator) if hasattr(value, 'numerator') else sympy.sympify(value)


def span_solve(basis: Sequence[Form], target: Form, arithmetic: Arithmetic = None) -> Optional[List]:
    """Coefficients c with sum c_i basis_i = target, or None if target is outside the span."""
    arithmetic = arithmetic or Arithmetic.exact()
    if not basis:
        return [] if target.is_zero(arithmetic) else None
    keys, rows = form_coordinates(list(basis) + [target])
    if not keys:
        return [sympy.Integer(0)] * len(basis)
    columns = rows[:-1]
    goal = rows[-1]
    if arithmetic.is_exact:
        matrix = sympy.Matrix([[col.get(k, 0) for col in columns] for k in keys])
        rhs = sympy.Matrix([goal.get(k, 0) for k in keys])
        try:
            solution, params = matrix.gauss_jordan_solve(rhs)
        except ValueError:
            return None
        if params.shape[0]:
            solution = solution.subs({p: 0 for p in params})
        return [sympy.cancel(c) for c in solution]
    matrix = numpy.array([[float(col.get(k, 0)) for col in columns] for k in keys])
    rhs = numpy.array([float(goal.get(k, 0)) for k in keys])
    solution, *_ = numpy.linalg.lstsq(matrix, rhs, rcond=None)
    if numpy.max(numpy.abs(matrix @ solution - rhs), initial=0.0) > max(arithmetic.tolerance, 1e-12):
        return None
    return [float(c) for c in solution]


def exact_rank(vectors: List[Dict[Tuple, object]], keys: List[Tuple]) -> int:
    if not vectors or not keys:
        return 0
    return sympy.Matrix([[v.get(k, 0) for k in keys] for v in vectors]).rank(simplify=True)


def cohomology_small(basis: Dict[int, Sequence[Form]],
                     differential: Callable[[Form], Form] = exterior.d) -> Dict[int, int]:
    """
    Betti numbers of the finite complex spanned by ``basis`` (degree -> forms).
    The span must be closed under the differential.
    """
    degrees = sorted(basis)
    ranks: Dict[int, int] = {}
    for degree in degrees:
        images = [differential(form) for form in basis[degree]]
        following = list(basis.get(degree + 1, []))
        nonzero = [img for img in images if not img.is_zero()]
        if not nonzero:
            ranks[degree] = 0
            continue
        if not following:
            raise errors.SubcomplexError()
        keys, rows = form_coordinates(following + nonzero)
        span_rank = exact_rank(rows[:len(following)], keys)
        if exact_rank(rows, keys) != span_rank:
            raise errors.SubcomplexError()
        ranks[degree] = exact_rank(rows[len(following):], keys)
    betti = {}
    for degree in degrees:
        size = len(basis[degree])
        if size:
            keys, rows = form_coordinates(list(basis[degree]))
            size = exact_rank(rows, keys)
        betti[degree] = size - ranks.get(degree, 0) - ranks.get(degree - 1, 0)
    logger.debug(f"Cohomology of a {sum(len(b) for b in basis.values())}-element complex: {betti}")
    return betti


def fourier_circle_basis(space, max_mode: int) -> Dict[int, List[Form]]:
    """Truncated trigonometric de Rham complex of a circle space, keyed by de Rham degree."""
    functions = [FourierPoly.constant(1)]
    for k in range(1, max_mode + 1):
        functions.extend([FourierPoly.cos(k), FourierPoly.sin(k)])
    fields = [CoeffField.separable([f]) for f in functions]
    return {
        0: [Form.scalar_function(space, f) for f in fields],
        1: [Form.build(space, 1, 0, [((0,), f)]) for f in fields],
    }
