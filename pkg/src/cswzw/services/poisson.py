"""
Pairings on observables and fields.

Linear observables of the bulk are conditioned compactly supported forms
placed in the twice-shifted complex, so a de Rham p-form phi has degree
|phi| = p - 2 there and p - 1 when regarded as a field.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Sequence, Tuple

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.form import Form
from cswzw.models.geometry import Geometry
from cswzw.models.report import CheckRecord
from cswzw.services import exterior
from cswzw.services.greens import causal_propagator, projection_pushforward
from cswzw.services.regions import is_disjoint
from cswzw.utils import errors

logger = logging.getLogger(__name__)


class PairingKind(Enum):
    EV = 'ev'
    TAU_SHIFTED = 'tau_shifted'
    TAU_ZERO = 'tau_zero'
    SIGMA_ZERO = 'sigma_zero'
    UPSILON_ZERO = 'upsilon_zero'


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _as_field(form: Form) -> Form:
    # A linear observable regarded as a field: one shift lower
    return form.with_shift(form.shift - 1)


def signed_integral(a: Form, b: Form, arithmetic: Arithmetic):
    """(-1)^{|a|} int a ^ b with |a| the cohomological degree of a."""
    return exterior.integrate(exterior.wedge(a, b), arithmetic) * _sign(a.cdeg)


def omega_shifted(a: Form, b: Form, arithmetic: Arithmetic = None):
    """omega_(-1) on bulk fields."""
    return signed_integral(a, b, arithmetic or Arithmetic.exact())


def omega_boundary(a: Form, b: Form, arithmetic: Arithmetic = None):
    """omega_(0) on boundary fields."""
    return signed_integral(a, b, arithmetic or Arithmetic.exact())


def ev(phi: Form, alpha: Form, arithmetic: Arithmetic = None):
    """Evaluation of a linear observable on a field: (-1)^{|phi|+1} int phi ^ alpha."""
    arithmetic = arithmetic or Arithmetic.exact()
    return exterior.integrate(exterior.wedge(phi, alpha), arithmetic) * _sign(phi.cdeg + 1)


def tau_shifted(phi: Form, psi: Form, arithmetic: Arithmetic = None):
    """The degree +1 pairing: omega_(-1) on the fields, regrouped past the observable shift."""
    arithmetic = arithmetic or Arithmetic.exact()
    return omega_shifted(_as_field(phi), _as_field(psi), arithmetic) * _sign(phi.cdeg + 1)


def tau_zero(geometry: Geometry, phi: Form, psi: Form, arithmetic: Arithmetic = None) -> Tuple[object, object]:
    """
    Both routes to the unshifted bulk pairing: ev(phi x G psi) with G the
    causal propagator on fields, and (-1)^{|phi|} int_B pi_* phi ^ pi_* psi.
    """
    arithmetic = arithmetic or Arithmetic.exact()
    propagated = causal_propagator(geometry)(_as_field(psi))
    definition = ev(phi, propagated, arithmetic)
    base = exterior.integrate(exterior.wedge(projection_pushforward(geometry, phi),
                                             projection_pushforward(geometry, psi)), arithmetic)
    return definition, base * _sign(phi.cdeg)


def sigma_zero(a: Form, b: Form, arithmetic: Arithmetic = None):
    """Base (or collar) observables: (-1)^{|a|} int a ^ b."""
    return signed_integral(a, b, arithmetic or Arithmetic.exact())


def upsilon_zero(phi: Form, psi: Form, arithmetic: Arithmetic = None):
    """Chiral boson bracket -int phi dpsi."""
    arithmetic = arithmetic or Arithmetic.exact()
    return -exterior.integrate(exterior.wedge(phi, exterior.d(psi)), arithmetic)


@dataclass(frozen=True)
class Pairing:
    kind: PairingKind
    geometry: Geometry
    arithmetic: Arithmetic = Arithmetic.exact()
    region: object = None

    def pair(self, a: Form, b: Form):
        """The pairing value; TauZero gives both routes as a tuple."""
        if self.region is not None:
            for form in (a, b):
                box = form.support_box()
                if box is not None and not self.region.covers_closed_box(box):
                    raise errors.SupportError()
        if self.kind == PairingKind.EV:
            return ev(a, b, self.arithmetic)
        if self.kind == PairingKind.TAU_SHIFTED:
            return tau_shifted(a, b, self.arithmetic)
        if self.kind == PairingKind.TAU_ZERO:
            return tau_zero(self.geometry, a, b, self.arithmetic)
        if self.kind == PairingKind.SIGMA_ZERO:
            return sigma_zero(a, b, self.arithmetic)
        return upsilon_zero(a, b, self.arithmetic)

    def value(self, a: Form, b: Form):
        # Single scalar (the definitional route for TauZero)
        result = self.pair(a, b)
        return result[0] if self.kind == PairingKind.TAU_ZERO else result

    def scalar_fn(self) -> Callable[[Form, Form], object]:
        return self.value

    def residual(self, value) -> float:
        return self.arithmetic.magnitude(value)


# ---- property checks ----
def check_antisymmetry(pairing: Pairing, pairs: Sequence[Tuple[Form, Form]],
                       prefix: str = 'p') -> List[CheckRecord]:
    records = []
    for i, (a, b) in enumerate(pairs):
        sign = _sign(a.cdeg * b.cdeg)
        total = pairing.value(a, b) + pairing.value(b, a) * sign
        residual = pairing.residual(total)
        records.append(CheckRecord(f"{pairing.kind.value} graded antisymmetry", f"{prefix}{i}", residual,
                                   pairing.arithmetic.within_tolerance(residual)))
    return records


def check_two_routes(pairing: Pairing, pairs: Sequence[Tuple[Form, Form]],
                     prefix: str = 'p') -> List[CheckRecord]:
    records = []
    for i, (a, b) in enumerate(pairs):
        definition, base = tau_zero(pairing.geometry, a, b, pairing.arithmetic)
        residual = pairing.residual(definition - base)
        records.append(CheckRecord("tau_zero definition = base formula", f"{prefix}{i}", residual,
                                   pairing.arithmetic.within_tolerance(residual),
                                   {'definition': str(definition), 'base': str(base)}))
    return records


def check_causality(pairing: Pairing, first_region, second_region, pairs: Sequence[Tuple[Form, Form]],
                    prefix: str = 'p') -> List[CheckRecord]:
    """Pairing of observables supported in flow-disjoint regions vanishes."""
    if not is_disjoint(first_region, second_region):
        raise errors.PreconditionError(errors.REGIONS_NOT_DISJOINT)
    records = []
    for i, (a, b) in enumerate(pairs):
        for form, region in ((a, first_region), (b, second_region)):
            box = form.support_box()
            if box is not None and not region.covers_closed_box(box):
                raise errors.SupportError()
        residual = max(pairing.residual(v) for v in _all_routes(pairing, a, b))
        records.append(CheckRecord(f"{pairing.kind.value} causality", f"{prefix}{i}", residual,
                                   pairing.arithmetic.within_tolerance(residual)))
    return records


def _all_routes(pairing: Pairing, a: Form, b: Form):
    result = pairing.pair(a, b)
    return result if isinstance(result, tuple) else (result,)


def check_naturality(pairing: Pairing, chain: Sequence, pairs: Sequence[Tuple[Form, Form]],
                     prefix: str = 'p') -> List[CheckRecord]:
    """
    The pairing computed on the smallest region agrees with the pairing of
    the extensions by zero to every larger region of the chain.
    """
    records = []
    for i, (a, b) in enumerate(pairs):
        base_value = Pairing(pairing.kind, pairing.geometry, pairing.arithmetic, chain[0]).value(a, b)
        residual = 0.0
        current_a, current_b = a, b
        for smaller, larger in zip(chain, chain[1:]):
            current_a = exterior.ext(current_a, smaller, larger)
            current_b = exterior.ext(current_b, smaller, larger)
            value = Pairing(pairing.kind, pairing.geometry, pairing.arithmetic, larger).value(current_a, current_b)
            residual = max(residual, pairing.residual(value - base_value))
        records.append(CheckRecord(f"{pairing.kind.value} naturality", f"{prefix}{i}", residual,
                                   pairing.arithmetic.within_tolerance(residual),
                                   {'levels': len(chain)}))
    return records


def check_ev_cochain(phi_samples: Sequence[Form], alpha_samples: Sequence[Form],
                     arithmetic: Arithmetic = None, prefix: str = 'p') -> List[CheckRecord]:
    """ev(d phi x alpha) + (-1)^{|phi|} ev(phi x d alpha) = 0"""
    arithmetic = arithmetic or Arithmetic.exact()
    records = []
    for i, (phi, alpha) in enumerate(zip(phi_samples, alpha_samples)):
        total = ev(exterior.d(phi), alpha, arithmetic) + ev(phi, exterior.d(alpha), arithmetic) * _sign(phi.cdeg)
        residual = arithmetic.magnitude(total)
        records.append(CheckRecord("ev cochain map", f"{prefix}{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


def check_tau_shifted(pairs: Sequence[Tuple[Form, Form]], arithmetic: Arithmetic = None,
                      prefix: str = 'p') -> List[CheckRecord]:
    """tau_(-1) equals the bare wedge integral: the Koszul signs cancel."""
    arithmetic = arithmetic or Arithmetic.exact()
    records = []
    for i, (phi, psi) in enumerate(pairs):
        raw = exterior.integrate(exterior.wedge(phi, psi), arithmetic)
        residual = arithmetic.magnitude(tau_shifted(phi, psi, arithmetic) - raw)
        records.append(CheckRecord("tau_shifted = int phi ^ psi", f"{prefix}{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records


def check_stokes(geometry: Geometry, pairs: Sequence[Tuple[Form, Form]], arithmetic: Arithmetic = None,
                 prefix: str = 'p') -> List[CheckRecord]:
    """
    omega_(-1)(d a, b) + (-1)^{|a|} omega_(-1)(a, d b) = omega_(0)(i^* a, i^* b)
    for compactly supported bulk fields.
    """
    arithmetic = arithmetic or Arithmetic.exact()
    records = []
    for i, (a, b) in enumerate(pairs):
        bulk = omega_shifted(exterior.d(a), b, arithmetic) + \
            omega_shifted(a, exterior.d(b), arithmetic) * _sign(a.cdeg)
        boundary = omega_boundary(exterior.boundary_restrict(a, geometry.boundary),
                                  exterior.boundary_restrict(b, geometry.boundary), arithmetic)
        residual = arithmetic.magnitude(bulk - boundary)
        records.append(CheckRecord("Stokes for omega", f"{prefix}{i}", residual,
                                   arithmetic.within_tolerance(residual)))
    return records
