from fractions import Fraction

import pytest

from cswzw.models.region import Region
from cswzw.services import regions
from cswzw.services.poisson import (
    Pairing,
    PairingKind,
    check_antisymmetry,
    check_causality,
    check_ev_cochain,
    check_stokes,
    check_tau_shifted,
    check_two_routes,
    upsilon_zero,
)
from cswzw.services.sampling import FormSampler, RegionSampler, suite_rng
from cswzw.utils import errors


def _passed(records):
    return all(r.passed for r in records)


def test_tau_zero_antisymmetry_and_routes(geometry, sampler, exact):
    pairs = [sampler.complementary_pair(sampler.lin_obs, 4) for _ in range(4)]
    tau = Pairing(PairingKind.TAU_ZERO, geometry, exact)
    assert _passed(check_antisymmetry(tau, pairs))
    assert _passed(check_two_routes(tau, pairs))


def test_sigma_and_upsilon_antisymmetry(geometry, sampler, exact):
    base_pairs = [sampler.complementary_pair(sampler.base_obs, 2) for _ in range(4)]
    boson_pairs = [(sampler.chiral_boson(), sampler.chiral_boson()) for _ in range(4)]
    assert _passed(check_antisymmetry(Pairing(PairingKind.SIGMA_ZERO, geometry, exact), base_pairs))
    assert _passed(check_antisymmetry(Pairing(PairingKind.UPSILON_ZERO, geometry, exact), boson_pairs))


def test_shifted_pairing_is_the_bare_integral(sampler, exact):
    pairs = [sampler.complementary_pair(sampler.lin_obs, 3) for _ in range(4)]
    assert _passed(check_tau_shifted(pairs, exact))


def test_ev_is_a_cochain_map_on_conditioned_fields(sampler, exact):
    fields = [sampler.conditioned_bulk(d) for d in (0, 1, 2) * 4]
    observables = [sampler.lin_obs(2 - f.degree) for f in fields]
    assert _passed(check_ev_cochain(observables, fields, exact))


def test_stokes(geometry, sampler, exact):
    pairs = [sampler.complementary_pair(sampler.bulk_field, 2) for _ in range(4)]
    assert _passed(check_stokes(geometry, pairs, exact))


def test_causality_on_disjoint_boxes(geometry, sampler, exact):
    boxes = RegionSampler(geometry, suite_rng(3, 'causality'))
    tau = Pairing(PairingKind.TAU_ZERO, geometry, exact)
    first, second, first_box, second_box = boxes.disjoint_boxes()
    assert regions.is_disjoint(first, second)
    pairs = [(sampler.lin_obs_in_box(d, first_box), sampler.lin_obs_in_box(4 - d, second_box)) for d in (1, 2, 3)]
    records = check_causality(tau, first, second, pairs)
    assert _passed(records)
    assert len(records) == 3


def test_causality_needs_disjoint_regions(geometry, exact):
    tau = Pairing(PairingKind.TAU_ZERO, geometry, exact)
    slab = Region(geometry.bulk, (((Fraction(0), Fraction(1)), (None, None), (None, None)),))
    with pytest.raises(errors.PreconditionError):
        check_causality(tau, slab, slab, [])


def test_pairing_rejects_forms_outside_its_region(cylinder, exact):
    sampler = FormSampler(cylinder, suite_rng(1, 'region'), exact)
    box = [(Fraction(0), Fraction(1)), (Fraction(0), Fraction(1, 2)), (Fraction(1, 2), Fraction(1))]
    phi = sampler.lin_obs_in_box(1, box)
    psi = sampler.lin_obs_in_box(3, box)
    elsewhere = Region(cylinder.bulk, (((Fraction(2), Fraction(3)), (None, None), (None, None)),))
    with pytest.raises(errors.SupportError):
        Pairing(PairingKind.TAU_ZERO, cylinder, exact, elsewhere).value(phi, psi)


def test_chiral_bosons_on_disjoint_arcs_commute(cylinder, exact):
    sampler = FormSampler(cylinder, suite_rng(2, 'arcs'), exact)
    phi = sampler.arc_function(Fraction(0), Fraction(1, 4))
    psi = sampler.arc_function(Fraction(1, 2), Fraction(3, 4))
    assert upsilon_zero(phi, psi, exact) == 0
