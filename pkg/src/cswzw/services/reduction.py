"""
Dimensional reduction and the boundary zig-zag.

Bulk side: pushforward along the flow pi_*, its quasi-inverse omega_* built
from a unit bump in tau, and the homotopy K with id - omega_* pi_* = dK + Kd.

Boundary side, on the tubular neighbourhood dB x [0,1) with coordinates
(sigma, rho): kappa from chiral boson functions to collar observables, its
quasi-inverse lambda (integration along rho) and the homotopy K with
id - kappa lambda = dK + Kd.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from cswzw.models.arithmetic import Arithmetic, format_rational
from cswzw.models.coefficients import ONE, CoeffField
from cswzw.models.complexes import ComplexId, ComplexTag, HomCochain
from cswzw.models.form import Form
from cswzw.models.geometry import Geometry
from cswzw.models.piecewise import PiecewisePoly
from cswzw.models.region import Region
from cswzw.models.report import CheckRecord
from cswzw.models.spaces import SpaceKind
from cswzw.services import exterior
from cswzw.services.exterior import FiberMode
from cswzw.services.greens import projection_pullback, projection_pushforward
from cswzw.services.homotopy import member, operator_boundary
from cswzw.services.poisson import ev, sigma_zero, tau_zero, upsilon_zero
from cswzw.utils import errors

logger = logging.getLogger(__name__)

TAU = 0
RHO = 1

LIN_OBS = ComplexId.of(ComplexTag.LIN_OBS)
BASE_OBS = ComplexId.of(ComplexTag.B_OBS, space_kind=SpaceKind.BASE)
COLLAR_OBS = ComplexId.of(ComplexTag.B_OBS, space_kind=SpaceKind.TUBULAR)
CHIRAL_BOSON = ComplexId.of(ComplexTag.CHIRAL_BOSON)


@dataclass(frozen=True)
class UnitBump:
    """
    C^1 quadratic B-spline density with total integral one, supported
    strictly inside (lo, hi).
    """
    lo: Fraction
    hi: Fraction
    density: PiecewisePoly

    @classmethod
    def inside(cls, lo, hi) -> 'UnitBump':
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError(f"empty bump interval ({lo}, {hi})")
        inset = (hi - lo) / 8
        a, b = lo + inset, hi - inset
        spline = PiecewisePoly.bspline([a, a + (b - a) / 3, a + 2 * (b - a) / 3, b])
        return cls(lo, hi, spline.scale(Fraction(1) / spline.definite_integral()))

    @property
    def cumulative(self) -> PiecewisePoly:
        """x -> integral of the density over (-inf, x]"""
        return self.density.cumulative_from_left()

    @property
    def tail(self) -> PiecewisePoly:
        """x -> integral of the density over [x, inf)"""
        return self.density.cumulative_to_right()

    @property
    def total(self):
        return self.density.definite_integral()

    def half_identity(self):
        """int w(x) (int_x^inf w) dx, which is 1/2 for every unit bump."""
        return (self.density * self.tail).definite_integral()

    def to_dict(self) -> dict:
        support = self.density.support()
        return {'interval': [format_rational(self.lo), format_rational(self.hi)],
                'support': [format_rational(support[0]), format_rational(support[1])]}


def time_bump_form(geometry: Geometry, bump: UnitBump) -> Form:
    bulk = geometry.bulk
    return Form.build(bulk, 1, 0, [((TAU,), CoeffField.separable([bump.density] + [ONE] * (bulk.dim - 1)))])


def collar_bump_form(geometry: Geometry, bump: UnitBump, shift: int = 1) -> Form:
    return Form.build(geometry.tubular, 1, shift, [((RHO,), CoeffField.separable([ONE, bump.density]))])


# ---- bulk reduction ----
def pi_star(geometry: Geometry, phi: Form, arithmetic: Arithmetic = None, check: bool = True) -> Form:
    """Integration along the flow; the image must be a base observable."""
    image = projection_pushforward(geometry, phi)
    if check and not member(geometry, BASE_OBS, image, arithmetic):
        raise errors.ConsistencyError(errors.INTERNAL_CONSISTENCY_ERROR.format(
            detail="pi_* image violates the base boundary condition"))
    return image


def omega_star(geometry: Geometry, bump: UnitBump, alpha: Form) -> Form:
    """alpha -> omega ^ pi^* alpha in the twice-shifted observable complex."""
    lifted = projection_pullback(geometry, alpha, 0)
    return exterior.wedge(time_bump_form(geometry, bump), lifted, shift=alpha.shift + 1)


def reduction_homotopy(geometry: Geometry, bump: UnitBump, phi: Form) -> Form:
    """K(phi) = int_{-inf}^tau phi - (int_{-inf}^tau omega) pi^* pi_* phi"""
    past = exterior.fiber_integrate(phi, TAU, FiberMode.PAST)
    if past.degree < 0:
        return past
    profile = CoeffField.separable([bump.cumulative] + [ONE] * (geometry.bulk.dim - 1))
    pulled = projection_pullback(geometry, pi_star(geometry, phi, check=False), phi.shift)
    return past - exterior.multiply(pulled, profile)


def reduction_cochains(geometry: Geometry, bump: UnitBump) -> Dict[str, HomCochain]:
    return {
        'pi_star': HomCochain('pi_*', 0, lambda form: pi_star(geometry, form, check=False), LIN_OBS, BASE_OBS),
        'omega_star': HomCochain('omega_*', 0, lambda form: omega_star(geometry, bump, form), BASE_OBS, LIN_OBS),
        'K': HomCochain('K', -1, lambda form: reduction_homotopy(geometry, bump, form), LIN_OBS, LIN_OBS),
    }


def verify_reduction_sdr(geometry: Geometry, bump: UnitBump, bulk_samples: Sequence[Form],
                         base_samples: Sequence[Form], arithmetic: Arithmetic = None) -> List[CheckRecord]:
    arithmetic = arithmetic or Arithmetic.exact()
    maps = reduction_cochains(geometry, bump)
    boundary_k = operator_boundary(maps['K'])
    records = []
    for i, alpha in enumerate(base_samples):
        residual = (pi_star(geometry, omega_star(geometry, bump, alpha), arithmetic) - alpha).residual(arithmetic)
        records.append(CheckRecord("pi_* omega_* = id", f"b{i}", residual, arithmetic.within_tolerance(residual)))
        lifted = omega_star(geometry, bump, alpha)
        ok = member(geometry, LIN_OBS, lifted, arithmetic)
        records.append(CheckRecord("omega_* lands in LinObs", f"b{i}", 0.0 if ok else 1.0, ok))
    for i, phi in enumerate(bulk_samples):
        roundtrip = omega_star(geometry, bump, pi_star(geometry, phi, arithmetic))
        residual = (phi - roundtrip - boundary_k(phi)).residual(arithmetic)
        records.append(CheckRecord("id - omega_* pi_* = dK + Kd", f"m{i}", residual,
                                   arithmetic.within_tolerance(residual)))
        image = maps['K'](phi)
        ok = image.degree < 0 or member(geometry, LIN_OBS, image, arithmetic)
        records.append(CheckRecord("K preserves the boundary condition", f"m{i}", 0.0 if ok else 1.0, ok))
    return records


def verify_intertwining(geometry: Geometry, pairs: Sequence[Tuple[Form, Form]],
                        arithmetic: Arithmetic = None) -> List[CheckRecord]:
    """tau_(0)(phi, psi) = sigma_(0)(pi_* phi, pi_* psi)"""
    arithmetic = arithmetic or Arithmetic.exact()
    records = []
    for i, (phi, psi) in enumerate(pairs):
        bulk_value, _ = tau_zero(geometry, phi, psi, arithmetic)
        base_value = sigma_zero(pi_star(geometry, phi, arithmetic), pi_star(geometry, psi, arithmetic), arithmetic)
        residual = arithmetic.magnitude(bulk_value - base_value)
        records.append(CheckRecord("tau_(0) = sigma_(0) (pi_* x pi_*)", f"p{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


# ---- boundary reduction ----
def _lift(field: CoeffField, profile: PiecewisePoly) -> CoeffField:
    # sigma-dependent field times a rho profile
    return field.insert_axis(RHO, profile)


def kappa(geometry: Geometry, bump: UnitBump, phi: Form) -> Form:
    """phi -> omega ^ phi - (int_rho^1 omega) dphi"""
    collar = geometry.tubular
    if phi.degree != 0:
        return Form.zero(collar, phi.degree + 1, COLLAR_OBS.shift)
    field = phi.component(())
    components = [((RHO,), _lift(field, bump.density)),
                  ((0,), _lift(field.partial(0), bump.tail).scale(-1))]
    return Form.build(collar, 1, COLLAR_OBS.shift, components)


def lambda_map(geometry: Geometry, alpha: Form) -> Form:
    """int_0^1 along rho on collar 1-forms; every other degree goes to zero."""
    circle = geometry.boundary_circle
    if alpha.degree != 1:
        return Form.zero(circle, alpha.cdeg, CHIRAL_BOSON.shift)
    return exterior.fiber_integrate(alpha, RHO, FiberMode.FULL, circle, CHIRAL_BOSON.shift)


def boundary_homotopy(geometry: Geometry, bump: UnitBump, alpha: Form) -> Form:
    """K(alpha) = int_rho^1 alpha - (int_rho^1 omega) int_0^1 alpha"""
    to_end = exterior.fiber_integrate(alpha, RHO, FiberMode.TO_END)
    if alpha.degree != 1:
        return to_end
    profile = lambda_map(geometry, alpha)
    lifted = Form.build(geometry.tubular, 0, alpha.shift,
                        [((), _lift(profile.component(()), bump.tail))])
    return to_end - lifted


def boundary_cochains(geometry: Geometry, bump: UnitBump) -> Dict[str, HomCochain]:
    return {
        'kappa': HomCochain('kappa', 0, lambda form: kappa(geometry, bump, form), CHIRAL_BOSON, COLLAR_OBS),
        'lambda': HomCochain('lambda', 0, lambda form: lambda_map(geometry, form), COLLAR_OBS, CHIRAL_BOSON),
        'K': HomCochain('K_bd', -1, lambda form: boundary_homotopy(geometry, bump, form), COLLAR_OBS, COLLAR_OBS),
    }


def _vanishes_at_boundary(form: Form, geometry: Geometry, arithmetic: Arithmetic) -> bool:
    if form.degree != 0:
        return True
    return exterior.boundary_restrict(form, geometry.boundary_circle).is_zero(arithmetic)


def verify_boundary_sdr(geometry: Geometry, bump: UnitBump, circle_samples: Sequence[Form],
                        collar_samples: Sequence[Form], arithmetic: Arithmetic = None) -> List[CheckRecord]:
    arithmetic = arithmetic or Arithmetic.exact()
    maps = boundary_cochains(geometry, bump)
    d_kappa = operator_boundary(maps['kappa'])
    d_lambda = operator_boundary(maps['lambda'])
    d_k = operator_boundary(maps['K'])
    records = []
    for i, phi in enumerate(circle_samples):
        image = maps['kappa'](phi)
        residual = (maps['lambda'](image) - phi).residual(arithmetic)
        records.append(CheckRecord("lambda kappa = id", f"w{i}", residual, arithmetic.within_tolerance(residual)))
        residual = d_kappa(phi).residual(arithmetic)
        records.append(CheckRecord("kappa is a cochain map", f"w{i}", residual,
                                   arithmetic.within_tolerance(residual)))
        ok = member(geometry, COLLAR_OBS, image, arithmetic)
        records.append(CheckRecord("kappa lands in collar observables", f"w{i}", 0.0 if ok else 1.0, ok))
    for i, alpha in enumerate(collar_samples):
        residual = (alpha - maps['kappa'](maps['lambda'](alpha)) - d_k(alpha)).residual(arithmetic)
        records.append(CheckRecord("id - kappa lambda = dK + Kd", f"c{i}", residual,
                                   arithmetic.within_tolerance(residual)))
        residual = d_lambda(alpha).residual(arithmetic)
        records.append(CheckRecord("lambda is a cochain map", f"c{i}", residual,
                                   arithmetic.within_tolerance(residual)))
        ok = _vanishes_at_boundary(maps['K'](alpha), geometry, arithmetic)
        records.append(CheckRecord("K vanishes at rho = 0", f"c{i}", 0.0 if ok else 1.0, ok))
    return records


def verify_kappa_pairing(geometry: Geometry, bump: UnitBump, pairs: Sequence[Tuple[Form, Form]],
                         arithmetic: Arithmetic = None) -> List[CheckRecord]:
    """upsilon_(0)(phi, psi) = sigma_(0)(kappa phi, kappa psi)"""
    arithmetic = arithmetic or Arithmetic.exact()
    records = []
    for i, (phi, psi) in enumerate(pairs):
        direct = upsilon_zero(phi, psi, arithmetic)
        through = sigma_zero(kappa(geometry, bump, phi), kappa(geometry, bump, psi), arithmetic)
        residual = arithmetic.magnitude(direct - through)
        records.append(CheckRecord("upsilon_(0) = sigma_(0) (kappa x kappa)", f"w{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


def verify_sub_arc_naturality(geometry: Geometry, bump: UnitBump, samples: Sequence[Form],
                              arc: Region, circle: Region, arithmetic: Arithmetic = None) -> List[CheckRecord]:
    """kappa and lambda commute with extension by zero from a sub-arc W' of W."""
    arithmetic = arithmetic or Arithmetic.exact()
    arc_collar = Region.preimage(arc, geometry.tubular, RHO).normalized()
    full_collar = Region.preimage(circle, geometry.tubular, RHO).normalized()
    records = []
    for i, phi in enumerate(samples):
        extended = exterior.ext(phi.with_region(arc), arc, circle)
        left = kappa(geometry, bump, extended)
        right = exterior.ext(kappa(geometry, bump, phi).with_region(arc_collar), arc_collar, full_collar)
        residual = (left - right).residual(arithmetic)
        back = lambda_map(geometry, left) - phi
        residual = max(residual, back.residual(arithmetic))
        records.append(CheckRecord("kappa, lambda natural under sub-arcs", f"w{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


# ---- interior restriction and the zig-zag ----
def is_interior(region: Region) -> bool:
    """The closure of every box stays away from the boundary of the base (or collar)."""
    axis = region.space.normal_axis
    value = region.space.boundary_value
    for box in region.boxes:
        lo, hi = box[axis]
        if value == region.space.directions[axis].lo and (lo is None or lo <= value):
            return False
        if value == region.space.directions[axis].hi and (hi is None or hi >= value):
            return False
    return True


def restrict_interior(geometry: Geometry, form: Form, region: Region) -> Form:
    """Regard a base observable on an interior region, where the boundary condition is void."""
    if not is_interior(region):
        raise errors.PreconditionError(errors.NOT_INTERIOR)
    box = form.support_box()
    if box is not None and not region.covers_closed_box(box):
        raise errors.SupportError()
    return form.with_region(region)


def collar_regions(geometry: Geometry, interval: Sequence) -> Tuple[Region, Region]:
    """(W x (a, b), W x [0, 1)) for W the whole boundary circle."""
    lo, hi = (Fraction(v) for v in interval)
    collar = geometry.tubular
    return (Region.from_boxes(collar, [((None, None), (lo, hi))]),
            Region.from_boxes(collar, [((None, None), (None, None))]))


@dataclass
class ZigZagResult:
    lambda_image: Form
    kappa_residual: float
    pushforward_residual: float
    passed: bool

    def to_dict(self) -> dict:
        return {'kappa_residual': self.kappa_residual, 'pushforward_residual': self.pushforward_residual,
                'pass': self.passed}


def zigzag(geometry: Geometry, bump: UnitBump, observable: Form, interval: Sequence,
           partners: Sequence[Form] = (), arithmetic: Arithmetic = None) -> ZigZagResult:
    """
    Carry an interior collar observable into W x [0, 1), send it to the chiral
    boson through lambda and measure how far kappa lambda is from the identity
    up to dK + Kd. The pushforward into the base must respect sigma_(0).
    """
    arithmetic = arithmetic or Arithmetic.exact()
    interior, collar = collar_regions(geometry, interval)
    extended = exterior.ext(observable.with_region(interior), interior, collar)
    maps = boundary_cochains(geometry, bump)
    image = maps['lambda'](extended)
    defect = extended - maps['kappa'](image) - operator_boundary(maps['K'])(extended)
    kappa_residual = defect.residual(arithmetic)
    pushed = exterior.collar_pushforward(extended, geometry)
    push_residual = 0.0
    for partner in partners:
        on_collar = sigma_zero(extended, partner, arithmetic)
        on_base = sigma_zero(pushed, exterior.collar_pushforward(partner, geometry), arithmetic)
        push_residual = max(push_residual, arithmetic.magnitude(on_collar - on_base))
    passed = arithmetic.within_tolerance(kappa_residual) and arithmetic.within_tolerance(push_residual)
    return ZigZagResult(image, kappa_residual, push_residual, passed)


@dataclass
class HolonomyResult:
    alpha: Fraction
    pairing: object
    lambda_value: object
    zigzag_residual: float

    def to_dict(self) -> dict:
        return {
            'alpha': format_rational(self.alpha),
            'pairing': str(self.pairing),
            'lambda_value': str(self.lambda_value),
            'zigzag_residual': self.zigzag_residual,
        }


def holonomy_observable(geometry: Geometry, interval: Sequence) -> Form:
    """pr^* of a unit bump in rho on (a, b), as a collar observable."""
    return collar_bump_form(geometry, UnitBump.inside(*interval))


def flat_connection(geometry: Geometry, alpha) -> Form:
    """A = alpha dchi on the collar, a field (shift 1)."""
    collar = geometry.tubular
    return Form.build(collar, 1, 1, [((0,), CoeffField.constant(collar.dim, alpha))])


def holonomy_demo(geometry: Geometry, alpha, interval: Sequence = (Fraction(1, 2), Fraction(1)),
                  bump: UnitBump = None, arithmetic: Arithmetic = None) -> HolonomyResult:
    if not geometry.is_cylinder:
        raise errors.PreconditionError(errors.NEEDS_CYLINDER.format(what="holonomy example"))
    arithmetic = arithmetic or Arithmetic.exact()
    bump = bump or UnitBump.inside(*interval)
    alpha = arithmetic.scalar(alpha)
    omega = holonomy_observable(geometry, interval)
    pairing = ev(omega, flat_connection(geometry, alpha), arithmetic)
    result = zigzag(geometry, bump, omega, interval, arithmetic=arithmetic)
    lambda_value = result.lambda_image.component(()).evaluate_exact((Fraction(0),))
    logger.debug(f"Holonomy alpha={alpha}: pairing {pairing}, lambda {lambda_value}")
    return HolonomyResult(alpha, pairing, lambda_value, result.kappa_residual)


def radial_profiles(geometry: Geometry, interval: Sequence, bump: UnitBump, points: Sequence) -> List[Tuple]:
    """(rho, omega density, K(omega)) rows for plotting."""
    omega = holonomy_observable(geometry, interval)
    homotopy = boundary_homotopy(geometry, bump, omega).component(())
    density = omega.component((RHO,))
    return [(float(x), density.evaluate((0, x)), homotopy.evaluate((0, x))) for x in points]
