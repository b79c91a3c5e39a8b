from fractions import Fraction

import pytest
import sympy

from cswzw.models.coefficients import ONE, CoeffField
from cswzw.models.complexes import ComplexId, ComplexTag
from cswzw.models.form import Form
from cswzw.models.piecewise import PiecewisePoly
from cswzw.services import exterior
from cswzw.services.greens import GreensDirection, GreensHomotopy
from cswzw.services.homotopy import member
from cswzw.services.reduction import LIN_OBS, UnitBump, pi_star, reduction_homotopy
from cswzw.utils import errors


def _step_difference(cylinder):
    # cumulative of a bump on (0, 1) minus that of a bump on (2, 3): both tails cancel
    early, late = UnitBump.inside(0, 1), UnitBump.inside(2, 3)
    shell = PiecewisePoly.indicator(Fraction(1, 2), Fraction(3, 4))
    field = (CoeffField.separable([early.cumulative, ONE, shell])
             - CoeffField.separable([late.cumulative, ONE, shell]))
    return Form.build(cylinder.bulk, 3, 0, [((0, 1, 2), field)]), early


def test_cancelling_tails_are_compactly_supported(cylinder):
    form, _ = _step_difference(cylinder)
    assert form.is_compactly_supported()
    assert form.support_box()[0] == (Fraction(1, 8), Fraction(23, 8))
    # difference of the bump means (5/2 - 1/2) times the chi and r lengths (1 and 1/4)
    assert exterior.integrate(form) == sympy.Rational(1, 2)


def test_a_single_cumulative_is_not_compact(cylinder):
    _, early = _step_difference(cylinder)
    form = Form.build(cylinder.bulk, 3, 0, [((0, 1, 2), CoeffField.separable([early.cumulative, ONE, ONE]))])
    assert not form.is_compactly_supported()
    assert form.support_box()[0] == (Fraction(1, 8), None)
    with pytest.raises(errors.SupportError):
        exterior.integrate(form)


def test_reduction_homotopy_keeps_compact_support(geometry, sampler, exact):
    bump = UnitBump.inside(0, 1)
    for degree in (1, 2, 3):
        image = reduction_homotopy(geometry, bump, sampler.lin_obs(degree))
        assert image.is_compactly_supported()
        assert member(geometry, LIN_OBS, image, exact)


def test_build_rejects_axes_outside_the_space(cylinder):
    field = CoeffField.constant(3, 1)
    with pytest.raises(errors.DegreeError):
        Form.build(cylinder.bulk, 1, 0, [((3,), field)])
    with pytest.raises(errors.DegreeError):
        Form.build(cylinder.bulk, 4, 0, [((0, 1, 2, 3), field)])


def test_sampled_forms_above_top_degree_are_zero(geometry, sampler, exact):
    form = sampler.lin_obs(4)
    assert form.degree == 4
    assert form.is_zero(exact)
    for _ in range(20):
        first, second = sampler.complementary_pair(sampler.lin_obs, 4)
        assert first.degree + second.degree == 4
        assert 1 <= first.degree <= 3 and 1 <= second.degree <= 3


def test_zero_forms_outside_the_degree_range_are_members(geometry, sampler, exact):
    conditioned = ComplexId.of(ComplexTag.F_L_M)
    assert member(geometry, conditioned, Form.zero(geometry.bulk, -1, 1), exact)
    # G sends a 0-form to the zero (-1)-form, which stays in the conditioned complex
    image = GreensHomotopy(geometry, GreensDirection.FORWARD)(sampler.conditioned_bulk(0))
    assert image.degree == -1
    assert member(geometry, conditioned, image, exact)
    # pi_* of a 0-form observable is the zero (-1)-form on the base
    assert pi_star(geometry, sampler.lin_obs(0), exact).is_zero(exact)
