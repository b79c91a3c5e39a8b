from fractions import Fraction

import pytest

from cswzw.models.coefficients import CoeffField
from cswzw.models.fourier import FourierPoly
from cswzw.models.piecewise import PiecewisePoly
from cswzw.utils import errors


def test_quadratic_bspline():
    spline = PiecewisePoly.bspline([0, 1, 2, 3])
    assert spline.degree == 2
    assert spline.definite_integral() == 1
    assert spline.evaluate(Fraction(3, 2)) == Fraction(3, 4)
    assert spline.support() == (0, 3)
    assert spline.continuity_order() == 1


def test_indicator_cumulatives():
    box = PiecewisePoly.indicator(Fraction(1), Fraction(3))
    up = box.cumulative_from_left()
    down = box.cumulative_to_right()
    assert up.evaluate(0) == 0
    assert up.evaluate(2) == 1
    assert up.evaluate(10) == 2
    assert down.evaluate(0) == 2
    assert down.evaluate(10) == 0
    # the two cumulatives add up to the total
    for x in (Fraction(-1), Fraction(3, 2), Fraction(5, 2), Fraction(4)):
        assert up.evaluate(x) + down.evaluate(x) == 2


def test_tails_block_cumulatives():
    step = PiecewisePoly.make([0], [(1,), ()])
    with pytest.raises(errors.SupportError):
        step.cumulative_from_left()
    with pytest.raises(errors.SupportError):
        PiecewisePoly.polynomial((0, 1)).definite_integral()
    assert step.cumulative_to_right().evaluate(5) == 0


def test_knots_must_increase():
    with pytest.raises(ValueError):
        PiecewisePoly((1, 0), ((), (1,), ()))
    with pytest.raises(ValueError):
        PiecewisePoly((0,), ((),))


def test_canonical_form_merges_pieces():
    assert PiecewisePoly.make([0, 1], [(1,), (1,), (1,)]) == PiecewisePoly.constant(1)
    assert PiecewisePoly.indicator(0, 1) - PiecewisePoly.indicator(0, 1) == PiecewisePoly.zero()


def test_shift_and_affine_pullback():
    box = PiecewisePoly.indicator(0, 1)
    assert box.shift(1) == PiecewisePoly.indicator(-1, 0)
    flipped = box.affine_pullback(-1, 0)
    assert flipped.evaluate(Fraction(-1, 2)) == 1
    assert flipped.evaluate(Fraction(1, 2)) == 0


def test_fourier_derivative_and_products():
    assert FourierPoly.cos(1).derivative() == FourierPoly.make({-1: -2})
    assert FourierPoly.sin(2).derivative() == FourierPoly.make({2: 4})
    assert (FourierPoly.sin(1) * FourierPoly.sin(1)).mean() == Fraction(1, 2)
    assert (FourierPoly.cos(3) * FourierPoly.cos(3)).mean() == Fraction(1, 2)
    assert (FourierPoly.sin(1) * FourierPoly.cos(1)).mean() == 0
    assert FourierPoly.constant(3).mean() == 3


def test_fourier_evaluate():
    f = FourierPoly.cos(1) + FourierPoly.sin(1, 2)
    assert f.evaluate(0) == pytest.approx(1.0)
    assert f.evaluate(Fraction(1, 4)) == pytest.approx(2.0)


def test_partial_derivative_tracks_pi():
    field = CoeffField.separable([PiecewisePoly.polynomial((0, 1)), FourierPoly.sin(1)])
    along_x = field.partial(1)
    # d/dchi sin(2 pi chi) = 2 pi cos(2 pi chi)
    point = (Fraction(3), Fraction(0))
    assert along_x.evaluate(point) == pytest.approx(3 * 2 * 3.141592653589793)
    assert field.partial(0).evaluate((Fraction(7), Fraction(1, 4))) == pytest.approx(1.0)
