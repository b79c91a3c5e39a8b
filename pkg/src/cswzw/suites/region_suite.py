from fractions import Fraction
from itertools import combinations
from typing import Dict

from cswzw.models.region import Region
from cswzw.models.spaces import SpaceKind
from cswzw.services import regions
from cswzw.services.region_oracle import LatticeOracle, compare_instance
from cswzw.suites.base_suite import BaseSuite

ORBIT_POINTS = 500


class RegionsOracleSuite(BaseSuite):
    """Region predicates against a brute-force lattice scan, on M and on dM."""

    name = 'regions_oracle'

    def execute(self) -> None:
        spaces = (self.geometry.bulk, self.geometry.boundary)
        oracles = {space.kind: LatticeOracle(space) for space in spaces}
        for space in spaces:
            oracle = oracles[space.kind]
            prefix = 'm' if space.kind == SpaceKind.BULK else 'b'
            for k in range(self.n_samples):
                instance = self.regions.instance(space)
                self.record(compare_instance(oracle, instance, self.rng, f"{prefix}{k}", ORBIT_POINTS))

        named = {name: region for name, region in self.named_regions().items() if region.space.kind in oracles}
        for name, region in named.items():
            oracle = oracles[region.space.kind]
            self.check("named region: is_convex vs lattice oracle", name,
                       regions.is_convex(region) == oracle.is_convex(region),
                       {'convex': regions.is_convex(region)})
        for (a, first), (b, second) in combinations(named.items(), 2):
            if first.space != second.space:
                continue
            oracle = oracles[first.space.kind]
            self.check("named regions: is_disjoint vs lattice oracle", f"{a},{b}",
                       regions.is_disjoint(first, second) == oracle.is_disjoint(first, second),
                       {'disjoint': regions.is_disjoint(first, second)})

        self._closed_boxes()

    def named_regions(self) -> Dict[str, Region]:
        """Regions from the scenario: a list of boxes (bulk) or {'space', 'boxes'}."""
        named = {}
        for name, data in sorted(self.config.regions.items()):
            kind = SpaceKind.BULK
            if isinstance(data, dict):
                kind = SpaceKind(data.get('space', SpaceKind.BULK.value))
                data = data['boxes']
            named[name] = Region.from_dict(self.geometry.space(kind), data)
        return named

    def _closed_boxes(self) -> None:
        # J-sets of compact boxes are closed, and J_up(K) is bounded below a tau-section
        bulk = self.geometry.bulk
        for k in range(min(self.n_samples, 50)):
            _, _, box, _ = self.regions.disjoint_boxes()
            box = tuple(tuple(interval) for interval in box)
            future, past = regions.closed_j_sets(box)
            self.check("J-sets of a compact box are closed", f"k{k}",
                       regions.is_closed_box(future, bulk) and regions.is_closed_box(past, bulk))
            above = box[0][1] + Fraction(1, 2)
            meet = regions.future_within_past_of_section(box, above)
            self.check("J_up(K) below a section is bounded", f"k{k}",
                       meet is not None and regions.box_is_bounded(meet, bulk))
            below = box[0][0] - Fraction(1, 4)
            self.check("J_up(K) misses sections below K", f"k{k}",
                       regions.future_within_past_of_section(box, below) is None)
