"""
Brute-force oracle for the region predicates.

Box endpoints used by the oracle live on the quarter lattice, so every cell
of a region's decomposition contains a point of the eighth lattice; scanning
that lattice and walking orbits in steps of 1/8 decides the predicates
exactly.
"""

import logging
import math
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Sequence, Tuple

import numpy

from cswzw.models.region import Region
from cswzw.models.report import CheckRecord
from cswzw.models.spaces import Direction
from cswzw.services import regions
from cswzw.utils import errors

logger = logging.getLogger(__name__)

SCALE = 8
# box endpoints are drawn from [-1, 1]; one lattice step of margin beyond them
TAU_WINDOW = (Fraction(-5, 4), Fraction(5, 4))
LINE_WINDOW = (Fraction(-5, 4), Fraction(5, 4))
HALF_LINE_WINDOW = (Fraction(0), Fraction(5, 4))


def _lattice(lo: Fraction, hi: Fraction) -> List[Fraction]:
    start = int(math.ceil(lo * SCALE))
    stop = int(math.floor(hi * SCALE))
    return [Fraction(k, SCALE) for k in range(start, stop + 1)]


def axis_lattice(direction: Direction) -> List[Fraction]:
    """Eighth-lattice points of one base direction (window for unbounded ones)."""
    if direction.is_circle:
        return [Fraction(k, SCALE) for k in range(SCALE)]
    lo = direction.lo if direction.lo is not None else LINE_WINDOW[0]
    if direction.hi is not None:
        hi = direction.hi
    else:
        hi = HALF_LINE_WINDOW[1] if direction.lo is not None else LINE_WINDOW[1]
    points = _lattice(lo, hi)
    return [p for p in points
            if (p != direction.lo or direction.lo_closed) and (p != direction.hi or direction.hi_closed)]


class LatticeOracle:
    """Scans a bulk or boundary region on the eighth lattice."""

    def __init__(self, space):
        self.space = space
        self.taus = _lattice(*TAU_WINDOW)
        self.base_points = list(cartesian(*[axis_lattice(d) for d in space.directions[1:]]))
        self._cache: Dict[Region, Dict[Tuple, List[bool]]] = {}

    def section(self, region: Region, base_point: Tuple) -> List[bool]:
        return [region.contains_point((tau,) + tuple(base_point)) for tau in self.taus]

    def sections(self, region: Region) -> Dict[Tuple, List[bool]]:
        if region not in self._cache:
            self._cache[region] = {b: self.section(region, b) for b in self.base_points}
        return self._cache[region]

    def is_convex(self, region: Region) -> bool:
        for pattern in self.sections(region).values():
            if _runs(pattern) > 1:
                return False
        return True

    def projects_to(self, region: Region) -> set:
        return {b for b, pattern in self.sections(region).items() if any(pattern)}

    def is_disjoint(self, first: Region, second: Region) -> bool:
        return not (self.projects_to(first) & self.projects_to(second))

    def is_cauchy(self, inner: Region, outer: Region) -> bool:
        return self.projects_to(inner) == self.projects_to(outer)

    def in_future(self, region: Region, point: Tuple) -> bool:
        # walk the orbit backwards: q in J_up(U) iff q - s e_tau in U for some s >= 0
        tau = point[0]
        steps = int((tau - TAU_WINDOW[0]) * SCALE) + 1
        return any(region.contains_point((tau - Fraction(k, SCALE),) + tuple(point[1:])) for k in range(steps))

    def in_past(self, region: Region, point: Tuple) -> bool:
        tau = point[0]
        steps = int((TAU_WINDOW[1] - tau) * SCALE) + 1
        return any(region.contains_point((tau + Fraction(k, SCALE),) + tuple(point[1:])) for k in range(steps))

    def sample_points(self, rng: numpy.random.Generator, count: int) -> List[Tuple]:
        points = []
        for _ in range(count):
            tau = self.taus[int(rng.integers(len(self.taus)))]
            base = self.base_points[int(rng.integers(len(self.base_points)))]
            points.append((tau,) + tuple(base))
        return points


def _runs(pattern: Sequence[bool]) -> int:
    runs = 0
    previous = False
    for inside in pattern:
        if inside and not previous:
            runs += 1
        previous = inside
    return runs


def compare_instance(oracle: LatticeOracle, instance: dict, rng: numpy.random.Generator,
                     sample_id: str, orbit_points: int = 500) -> List[CheckRecord]:
    """
    Run every predicate on one instance {'first', 'second', 'inner', 'outer'}
    and compare with the lattice scan. Each disagreement is a failed record.
    """
    first, second = instance['first'], instance['second']
    inner, outer = instance['inner'], instance['outer']
    records = []

    exact_convex = regions.is_convex(first)
    records.append(_agreement("is_convex", sample_id, exact_convex, oracle.is_convex(first)))

    records.append(_agreement("is_disjoint", sample_id, regions.is_disjoint(first, second),
                              oracle.is_disjoint(first, second)))

    oracle_convex = oracle.is_convex(inner) and oracle.is_convex(outer)
    try:
        exact_cauchy = regions.is_cauchy(inner, outer)
        records.append(_agreement("is_cauchy", sample_id, exact_cauchy,
                                  oracle_convex and oracle.is_cauchy(inner, outer)))
    except errors.PreconditionError:
        records.append(_agreement("is_cauchy precondition", sample_id, False, oracle_convex))

    future, past = regions.j_sets(first)
    mismatches = 0
    for point in oracle.sample_points(rng, orbit_points):
        if future.contains_point(point) != oracle.in_future(first, point):
            mismatches += 1
        if past.contains_point(point) != oracle.in_past(first, point):
            mismatches += 1
    records.append(CheckRecord("j_sets", sample_id, float(mismatches), mismatches == 0,
                               {'points': orbit_points} if mismatches else {}))
    return records


def _agreement(identity: str, sample_id: str, exact: bool, oracle: bool) -> CheckRecord:
    agree = exact == oracle
    detail = {} if agree else {'exact': exact, 'oracle': oracle}
    return CheckRecord(f"{identity} vs lattice oracle", sample_id, 0.0 if agree else 1.0, agree, detail)
