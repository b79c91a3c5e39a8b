from fractions import Fraction

import pytest

from cswzw.models.geometry import Pointing
from cswzw.services import exterior
from cswzw.services.chirality import (
    chiral_part,
    chiral_residual,
    classify_pointing,
    hodge_star_boundary,
    invariant_chiral_coframe,
    physical_one_form,
)
from cswzw.utils import errors


@pytest.mark.parametrize('vector, expected', [
    ((1, 1), Pointing.NE),
    ((1, -1), Pointing.NW),
    ((-1, -1), Pointing.SW),
    ((-1, 1), Pointing.SE),
    ((2, 2), Pointing.NE),
    ((1, 0), Pointing.NOT_NULL),
    ((1, 2), Pointing.NOT_NULL),
])
def test_classify_pointing(geometry, vector, expected):
    point = (Fraction(0), Fraction(0), geometry.boundary_value)
    assert classify_pointing(geometry, point, vector) == expected


def test_antipodes_reverse_the_vector(geometry):
    point = (Fraction(3), Fraction(1, 2), geometry.boundary_value)
    for vector in ((1, 1), (1, -1)):
        flipped = (-vector[0], -vector[1])
        assert classify_pointing(geometry, point, flipped) == classify_pointing(geometry, point, vector).antipode


def test_classify_pointing_errors(geometry):
    with pytest.raises(errors.DegenerateVectorError):
        classify_pointing(geometry, (0, 0, geometry.boundary_value), (0, 0))
    with pytest.raises(errors.PreconditionError):
        classify_pointing(geometry, (0, 0, Fraction(1, 2)), (1, 1))


def test_star_squares_to_identity(geometry, sampler, exact):
    for _ in range(5):
        form = sampler.boundary_field(1)
        twice = hodge_star_boundary(geometry, hodge_star_boundary(geometry, form))
        assert (twice - form).is_zero(exact)


def test_chiral_eigenspace(geometry, exact):
    # dt - eps dx spans the chiral line, dt + eps dx its complement
    chiral = physical_one_form(geometry, 1, -geometry.epsilon)
    other = physical_one_form(geometry, 1, geometry.epsilon)
    assert chiral_residual(geometry, chiral, exact) == 0
    assert chiral_residual(geometry, other, exact) > 0
    inside, outside = chiral_part(geometry, chiral + other)
    assert (inside - chiral).is_zero(exact)
    assert (outside - other).is_zero(exact)


def test_invariant_coframe(geometry, exact):
    beta = invariant_chiral_coframe(geometry)
    assert chiral_residual(geometry, beta, exact) == 0
    assert (exterior.translate(beta, Fraction(1, 3)) - beta).is_zero(exact)
    assert exterior.d(beta).is_zero(exact)


def test_star_rejects_non_boundary_forms(geometry, sampler):
    with pytest.raises(errors.SpaceMismatchError):
        hodge_star_boundary(geometry, sampler.bulk_field(1))
    with pytest.raises(errors.DegreeError):
        hodge_star_boundary(geometry, sampler.boundary_field(2))
