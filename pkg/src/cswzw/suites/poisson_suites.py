"""
Suites for the pairings: graded antisymmetry and the two routes to the
unshifted bulk pairing, Einstein causality (pairings and CCR commutators),
and naturality under extension by zero.
"""

from fractions import Fraction

from cswzw.models.region import Region
from cswzw.models.report import CheckRecord
from cswzw.services import ccr, regions
from cswzw.services.poisson import (
    Pairing,
    PairingKind,
    check_antisymmetry,
    check_causality,
    check_ev_cochain,
    check_naturality,
    check_stokes,
    check_two_routes,
    check_tau_shifted,
    upsilon_zero,
)
from cswzw.services.sampling import quarter_points
from cswzw.suites.base_suite import BaseSuite
from cswzw.utils import errors


class PoissonAntisymmetrySuite(BaseSuite):
    name = 'poisson_antisymmetry'

    def execute(self) -> None:
        n = self.n_samples
        lin_pairs = [self.sampler.complementary_pair(self.sampler.lin_obs, 4) for _ in range(n)]
        base_pairs = [self.sampler.complementary_pair(self.sampler.base_obs, 2) for _ in range(n)]
        boson_pairs = [(self.sampler.chiral_boson(), self.sampler.chiral_boson()) for _ in range(n)]
        for prefix, samples in (('t', lin_pairs), ('s', base_pairs), ('u', boson_pairs)):
            self.remember(prefix, samples)

        tau = Pairing(PairingKind.TAU_ZERO, self.geometry, self.arithmetic)
        self.record(check_antisymmetry(tau, lin_pairs, 't'))
        self.record(check_antisymmetry(Pairing(PairingKind.SIGMA_ZERO, self.geometry, self.arithmetic),
                                       base_pairs, 's'))
        self.record(check_antisymmetry(Pairing(PairingKind.UPSILON_ZERO, self.geometry, self.arithmetic),
                                       boson_pairs, 'u'))
        self.record(check_two_routes(tau, lin_pairs, 't'))

        shifted_pairs = [self.sampler.complementary_pair(self.sampler.lin_obs, 3) for _ in range(n)]
        self.remember('r', shifted_pairs)
        self.record(check_tau_shifted(shifted_pairs, self.arithmetic, 'r'))
        self.record(check_antisymmetry(Pairing(PairingKind.TAU_SHIFTED, self.geometry, self.arithmetic),
                                       shifted_pairs, 'r'))

        # ev is a cochain map on boundary-conditioned fields only
        fields = [self.sampler.conditioned_bulk(d) for d in self.sampler.degrees(n, range(3))]
        observables = [self.sampler.lin_obs(2 - f.degree) for f in fields]
        self.remember('e', list(zip(observables, fields)))
        self.record(check_ev_cochain(observables, fields, self.arithmetic, 'e'))

        field_pairs = [self.sampler.complementary_pair(self.sampler.bulk_field, 2) for _ in range(n)]
        self.remember('f', field_pairs)
        self.record(check_stokes(self.geometry, field_pairs, self.arithmetic, 'f'))


class CausalitySuite(BaseSuite):
    name = 'causality'

    def execute(self) -> None:
        tau = Pairing(PairingKind.TAU_ZERO, self.geometry, self.arithmetic)
        for k in range(self.n_samples):
            first, second, first_box, second_box = self.regions.disjoint_boxes()
            pairs = []
            for _ in range(2):
                degree = int(self.rng.integers(1, 4))
                pairs.append((self.sampler.lin_obs_in_box(degree, first_box),
                              self.sampler.lin_obs_in_box(4 - degree, second_box)))
            self.record(check_causality(tau, first, second, pairs, f"r{k}."))

            labels = ['a0', 'a1', 'b0', 'b1']
            forms = [pairs[0][0], pairs[1][0], pairs[0][1], pairs[1][1]]
            generators = ccr.GeneratorSet.build(labels, forms, lambda a, b: tau.value(a, b), self.arithmetic,
                                                require_differential=False)
            self.record(ccr.causality_check(generators, [0, 1], [2, 3], first, second, regions.is_disjoint))

        overlapping = Region(self.geometry.bulk, (((Fraction(0), Fraction(1)), (None, None), (None, None)),))
        self.expect_error("overlapping regions rejected", errors.PreconditionError,
                          lambda: check_causality(tau, overlapping, overlapping, []))
        self._chiral_boson_causality()

    def _chiral_boson_causality(self) -> None:
        # disjoint arcs of the boundary circle (or line)
        circle = self.geometry.boundary_circle
        lo = Fraction(0) if self.geometry.is_cylinder else Fraction(-1)
        points = quarter_points(lo, lo + (1 if self.geometry.is_cylinder else 2))
        count = min(self.n_samples, 20)
        for k in range(count):
            a, b, c, d = sorted(int(i) for i in self.rng.choice(len(points), size=4, replace=False))
            first = Region(circle, (((points[a], points[b]),),))
            second = Region(circle, (((points[c], points[d]),),))
            phi = self.sampler.arc_function(points[a], points[b])
            psi = self.sampler.arc_function(points[c], points[d])
            value = upsilon_zero(phi, psi, self.arithmetic)
            residual = self.arithmetic.magnitude(value)
            self.report.add(CheckRecord("upsilon_zero causality", f"w{k}", residual,
                                        self.arithmetic.within_tolerance(residual)))
            generators = ccr.GeneratorSet.build(['phi', 'psi'], [phi, psi],
                                                lambda x, y: upsilon_zero(x, y, self.arithmetic), self.arithmetic,
                                                require_differential=False)
            self.record(ccr.causality_check(generators, [0], [1], first, second,
                                            lambda u, v: not u.intersects(v)))


class NaturalitySuite(BaseSuite):
    name = 'naturality'

    def execute(self) -> None:
        tau = Pairing(PairingKind.TAU_ZERO, self.geometry, self.arithmetic)
        bulk = self.geometry.bulk
        for k in range(self.n_samples):
            first, _, box, _ = self.regions.disjoint_boxes()
            (t_lo, t_hi), (s_lo, s_hi), _ = box
            quarter = Fraction(1, 4)
            spatial = (None, None) if self.geometry.is_cylinder else (s_lo - quarter, s_hi + quarter)
            middle = Region(bulk, (((t_lo - quarter, t_hi + quarter), spatial, (None, None)),))
            chain = [first, middle, Region.whole(bulk)]
            degree = int(self.rng.integers(1, 4))
            pairs = [(self.sampler.lin_obs_in_box(degree, box), self.sampler.lin_obs_in_box(4 - degree, box))]
            self.record(check_naturality(tau, chain, pairs, f"r{k}."))

        # the localization: unit and counit of projection / preimage
        for k in range(min(self.n_samples, 20)):
            region = self.regions.region(bulk)
            projected, saturated = regions.localization_functors(region)
            self.check("U within pi^-1 pi(U)", f"u{k}", regions.unit_holds(region))
            self.check("pi(pi^-1(V)) = V", f"u{k}", regions.counit_holds(projected, bulk))
            self.check("preimage is saturated", f"u{k}", regions.image(saturated).same_set(projected))

