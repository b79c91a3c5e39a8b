from fractions import Fraction

import pytest
import sympy

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.geometry import Geometry
from cswzw.models.region import Region
from cswzw.services.reduction import (
    UnitBump,
    holonomy_demo,
    is_interior,
    kappa,
    lambda_map,
    radial_profiles,
    restrict_interior,
    verify_boundary_sdr,
    verify_intertwining,
    verify_kappa_pairing,
    verify_reduction_sdr,
    verify_sub_arc_naturality,
)
from cswzw.services.sampling import FormSampler, bump_intervals, suite_rng
from cswzw.utils import errors


def _failures(records):
    return [r.to_dict() for r in records if not r.passed]


@pytest.mark.parametrize('lo, hi', bump_intervals(10))
def test_unit_bump(lo, hi):
    bump = UnitBump.inside(lo, hi)
    assert bump.total == 1
    assert bump.half_identity() == Fraction(1, 2)
    support = bump.density.support()
    assert lo < support[0] and support[1] < hi
    assert bump.density.continuity_order() == 1
    assert bump.cumulative.evaluate(hi) == 1
    assert bump.tail.evaluate(lo) == 1


def test_unit_bump_needs_an_interval():
    with pytest.raises(ValueError):
        UnitBump.inside(1, 1)


def test_bulk_reduction_is_a_deformation_retract(geometry, sampler, exact):
    bump = UnitBump.inside(0, 1)
    bulk = [sampler.lin_obs(d) for d in range(4)]
    base = [sampler.base_obs(d) for d in range(3)]
    assert not _failures(verify_reduction_sdr(geometry, bump, bulk, base, exact))
    pairs = [sampler.complementary_pair(sampler.lin_obs, 4) for _ in range(3)]
    assert not _failures(verify_intertwining(geometry, pairs, exact))


def test_boundary_reduction_is_a_deformation_retract(geometry, sampler, exact):
    bump = UnitBump.inside(Fraction(1, 2), 1)
    bosons = [sampler.chiral_boson() for _ in range(3)]
    collar = [sampler.collar_obs(d) for d in range(3)]
    assert not _failures(verify_boundary_sdr(geometry, bump, bosons, collar, exact))
    pairs = [(sampler.chiral_boson(), sampler.chiral_boson()) for _ in range(3)]
    assert not _failures(verify_kappa_pairing(geometry, bump, pairs, exact))


def test_lambda_undoes_kappa(geometry, sampler, exact):
    bump = UnitBump.inside(Fraction(1, 4), Fraction(3, 4))
    phi = sampler.chiral_boson()
    image = kappa(geometry, bump, phi)
    assert image.degree == 1
    assert (lambda_map(geometry, image) - phi).is_zero(exact)


def test_sub_arc_naturality(cylinder, exact):
    sampler = FormSampler(cylinder, suite_rng(5, 'arcs'), exact)
    lo, hi = Fraction(1, 8), Fraction(5, 8)
    circle = cylinder.boundary_circle
    arc = Region(circle, (((lo, hi),),))
    samples = [sampler.arc_function(lo, hi) for _ in range(3)]
    records = verify_sub_arc_naturality(cylinder, UnitBump.inside(Fraction(1, 2), 1), samples, arc,
                                        Region.whole(circle), exact)
    assert not _failures(records)


def test_interior_regions(cylinder):
    base = cylinder.base
    inside = Region(base, (((None, None), (Fraction(1, 2), Fraction(3, 4))),))
    touching = Region(base, (((None, None), (Fraction(1, 2), None)),))
    assert is_interior(inside)
    assert not is_interior(touching)
    assert not is_interior(Region.whole(base))


def test_restriction_needs_an_interior_region(cylinder, exact):
    form = FormSampler(cylinder, suite_rng(0, 'base'), exact).base_obs(1)
    with pytest.raises(errors.PreconditionError):
        restrict_interior(cylinder, form, Region.whole(cylinder.base))


@pytest.mark.parametrize('alpha', [Fraction(1), Fraction(0), Fraction(-2), Fraction(7, 2)])
def test_holonomy_pairing(cylinder, alpha):
    result = holonomy_demo(cylinder, alpha)
    assert sympy.simplify(result.pairing + sympy.Rational(alpha.numerator, alpha.denominator)) == 0
    assert result.lambda_value == 1
    assert result.zigzag_residual == 0


def test_holonomy_float_backend(cylinder):
    result = holonomy_demo(cylinder, 3, arithmetic=Arithmetic.floating())
    assert float(result.pairing) == pytest.approx(-3.0)


def test_holonomy_needs_the_cylinder():
    with pytest.raises(errors.PreconditionError):
        holonomy_demo(Geometry.from_names('half_space', '+'), 1)


def test_radial_profiles_follow_the_bump(cylinder):
    bump = UnitBump.inside(Fraction(1, 2), 1)
    points = [Fraction(k, 8) for k in range(9)]
    rows = radial_profiles(cylinder, (Fraction(1, 2), Fraction(1)), bump, points)
    assert len(rows) == len(points)
    # K(omega) vanishes at rho = 0 and at the end of the collar
    assert rows[0][2] == pytest.approx(0.0)
    assert rows[-1][2] == pytest.approx(0.0)
    assert rows[4][1] == pytest.approx(float(bump.density.evaluate(Fraction(1, 2))))
