from fractions import Fraction

import pytest

from cswzw.models.region import Region
from cswzw.services import regions
from cswzw.services.region_oracle import LatticeOracle, compare_instance
from cswzw.services.sampling import RegionSampler, suite_rng
from cswzw.utils import errors

Q = Fraction


def _box(tau, chi=(None, None), r=(None, None)):
    return (tuple(tau), tuple(chi), tuple(r))


@pytest.fixture
def bulk(cylinder):
    return cylinder.bulk


def test_convexity(bulk):
    single = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 2))),))
    stacked = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 2))), _box((Q(2), Q(3)), (Q(0), Q(1, 2)))))
    assert regions.is_convex(single)
    assert not regions.is_convex(stacked)
    # stacked boxes over disjoint arcs never share a flow line
    side_by_side = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 4))), _box((Q(2), Q(3)), (Q(1, 2), Q(3, 4)))))
    assert regions.is_convex(side_by_side)


def test_disjointness_is_about_flow_lines(bulk):
    left = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 4))),))
    right = Region(bulk, (_box((Q(0), Q(1)), (Q(1, 2), Q(3, 4))),))
    later = Region(bulk, (_box((Q(5), Q(6)), (Q(1, 8), Q(1, 5))),))
    assert regions.is_disjoint(left, right)
    assert not regions.is_disjoint(left, later)


def test_cauchy(bulk):
    outer = Region(bulk, (_box((Q(-1), Q(2)), (Q(0), Q(1, 2))),))
    inner = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 2))),))
    thin = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 4))),))
    assert regions.is_cauchy(inner, outer)
    assert not regions.is_cauchy(thin, outer)
    with pytest.raises(errors.PreconditionError):
        regions.is_cauchy(outer, inner)


def test_j_sets(bulk):
    region = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 2)), (Q(1, 2), Q(3, 4))),))
    future, past = regions.j_sets(region)
    assert future.contains_point((Q(10), Q(1, 4), Q(5, 8)))
    assert not future.contains_point((Q(-1), Q(1, 4), Q(5, 8)))
    assert past.contains_point((Q(-10), Q(1, 4), Q(5, 8)))
    assert not past.contains_point((Q(2), Q(1, 4), Q(5, 8)))


def test_localization_unit_and_counit(bulk):
    region = Region(bulk, (_box((Q(0), Q(1)), (Q(0), Q(1, 2))), _box((Q(3), Q(4)), (Q(1, 4), Q(3, 4)))))
    projected, saturated = regions.localization_functors(region)
    assert projected.space.kind.value == 'base'
    assert regions.unit_holds(region)
    assert regions.counit_holds(projected, bulk)
    assert regions.image(saturated).same_set(projected)


def test_overlapping_boxes_equal_their_union(bulk):
    split = Region(bulk, (_box((Q(0), Q(3, 4))), _box((Q(1, 4), Q(1)))))
    whole = Region(bulk, (_box((Q(0), Q(1))),))
    assert split.same_set(whole)
    assert split.normalized().same_set(whole)


def test_predicates_need_a_flow_space(cylinder):
    with pytest.raises(errors.SpaceMismatchError):
        regions.is_convex(Region.whole(cylinder.base))


def test_closed_j_sets_of_a_compact_box(bulk):
    box = ((Q(0), Q(1)), (Q(0), Q(1, 2)), (Q(1, 2), Q(1)))
    future, past = regions.closed_j_sets(box)
    assert regions.is_closed_box(future, bulk)
    assert regions.is_closed_box(past, bulk)
    assert not regions.box_is_bounded(future, bulk)
    meet = regions.future_within_past_of_section(box, Q(3))
    assert meet == ((Q(0), Q(3)), (Q(0), Q(1, 2)), (Q(1, 2), Q(1)))
    assert regions.box_is_bounded(meet, bulk)
    assert regions.future_within_past_of_section(box, Q(-1)) is None


def test_section_meet_needs_a_time_bounded_box():
    box = _box((None, Q(1)), (Q(0), Q(1, 2)), (Q(1, 2), Q(1)))
    with pytest.raises(errors.PreconditionError):
        regions.future_within_past_of_section(box, Q(3))


def test_exact_predicates_agree_with_the_lattice(geometry):
    sampler = RegionSampler(geometry, suite_rng(11, 'regions'))
    rng = suite_rng(12, 'points')
    for space in (geometry.bulk, geometry.boundary):
        oracle = LatticeOracle(space)
        for k in range(5):
            records = compare_instance(oracle, sampler.instance(space), rng, f"s{k}", 100)
            assert all(r.passed for r in records), [r.to_dict() for r in records if not r.passed]
