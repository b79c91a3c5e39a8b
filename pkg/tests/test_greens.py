from fractions import Fraction

import pytest

from cswzw.models.complexes import ComplexTag
from cswzw.models.spaces import SpaceKind
from cswzw.services import exterior
from cswzw.services.greens import (
    GreensDirection,
    GreensHomotopy,
    causal_propagator,
    greens_pair,
    verify_bulk_boundary_compatibility,
    verify_difference_identity,
    verify_homotopy_identity,
    verify_preserves_condition,
)
from cswzw.services.reduction import UnitBump, time_bump_form


def _all_pass(records):
    failures = [r for r in records if not r.passed]
    assert not failures, failures
    return records


def test_d_squared_vanishes(sampler, exact):
    for degree in range(4):
        form = sampler.bulk_field(degree)
        assert exterior.d(exterior.d(form)).is_zero(exact)
    for degree in range(3):
        form = sampler.boundary_field(degree)
        assert exterior.d(exterior.d(form)).is_zero(exact)


@pytest.mark.parametrize('space_kind', [SpaceKind.BULK, SpaceKind.BOUNDARY])
def test_homotopy_identity(geometry, sampler, exact, space_kind):
    top = 4 if space_kind == SpaceKind.BULK else 3
    field = sampler.bulk_field if space_kind == SpaceKind.BULK else sampler.boundary_field
    samples = [field(d) for d in range(top)]
    for green in greens_pair(geometry, space_kind):
        _all_pass(verify_homotopy_identity(green, samples, exact))
        assert all(green.support_contained(form) for form in samples)


def test_difference_identity(geometry, sampler, exact):
    bulk = [sampler.bulk_field(d) for d in range(4)]
    boundary = [sampler.boundary_field(d) for d in range(3)]
    _all_pass(verify_difference_identity(geometry, bulk, exact))
    _all_pass(verify_difference_identity(geometry, boundary, exact))


def test_greens_preserve_boundary_condition(geometry, sampler, exact):
    conditioned = [sampler.conditioned_bulk(d) for d in range(4)]
    chiral = [sampler.chiral_boundary(d) for d in (1, 2)]
    for direction in GreensDirection:
        _all_pass(verify_preserves_condition(GreensHomotopy(geometry, direction), conditioned, exact))
        _all_pass(verify_preserves_condition(GreensHomotopy(geometry, direction, SpaceKind.BOUNDARY),
                                             chiral, exact))
        _all_pass(verify_bulk_boundary_compatibility(geometry, direction, conditioned, exact))


def test_forward_green_of_a_time_bump(cylinder):
    bump = UnitBump.inside(0, 1)
    up, down = greens_pair(cylinder)
    image = up(time_bump_form(cylinder, bump))
    assert image.degree == 0
    profile = image.component(())
    point = (Fraction(1, 3), Fraction(0), Fraction(1, 2))
    assert profile.evaluate_exact(point) == bump.cumulative.evaluate(Fraction(1, 3))
    assert profile.evaluate_exact((Fraction(2), Fraction(0), Fraction(1, 2))) == 1
    assert profile.evaluate_exact((Fraction(-1), Fraction(0), Fraction(1, 2))) == 0
    # the backward homotopy of the same bump lives in the past
    backward = down(time_bump_form(cylinder, bump)).component(())
    assert backward.evaluate_exact((Fraction(2), Fraction(0), Fraction(1, 2))) == 0


def test_greens_commute_with_the_flow(geometry, sampler, exact):
    form = sampler.bulk_field(1)
    for green in greens_pair(geometry):
        moved = green(exterior.translate(form, Fraction(3, 4))) - exterior.translate(green(form), Fraction(3, 4))
        assert moved.is_zero(exact)


def test_boundary_greens_use_the_boundary_field_complex(geometry, sampler, exact):
    samples = [sampler.boundary_field(d) for d in range(3)]
    up, down = greens_pair(geometry, SpaceKind.BOUNDARY)
    assert up.source.tag == ComplexTag.F_BD
    assert up.source.space_kind == SpaceKind.BOUNDARY
    _all_pass(verify_homotopy_identity(up, samples, exact, 'b'))
    _all_pass(verify_homotopy_identity(down, samples, exact, 'b'))
    propagator = causal_propagator(geometry, SpaceKind.BOUNDARY)
    for form in samples:
        assert (propagator(form) - up(form) + down(form)).is_zero(exact)
