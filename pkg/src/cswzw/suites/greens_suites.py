"""
Suites for the Green's homotopies: the homotopy identity with its support
property, the difference identity, and the restriction to the chiral
boundary condition.
"""

from fractions import Fraction

from cswzw.models.report import CheckRecord
from cswzw.models.spaces import SpaceKind
from cswzw.services import exterior
from cswzw.services.chirality import chiral_residual, hodge_star_boundary, invariant_chiral_coframe, sd_projectors
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
from cswzw.suites.base_suite import BaseSuite


class GreensIdentitiesSuite(BaseSuite):
    name = 'greens_identities'

    def execute(self) -> None:
        bulk = [self.sampler.bulk_field(d) for d in self.sampler.degrees(self.n_samples, range(4))]
        boundary = [self.sampler.boundary_field(d) for d in self.sampler.degrees(self.n_samples, range(3))]
        self.remember('m', bulk)
        self.remember('b', boundary)
        for space_kind, samples, prefix in ((SpaceKind.BULK, bulk, 'm'), (SpaceKind.BOUNDARY, boundary, 'b')):
            for green in greens_pair(self.geometry, space_kind):
                self.record(verify_homotopy_identity(green, samples, self.arithmetic, prefix))
                for i, form in enumerate(samples):
                    self.check(f"supp {green.name} within J", f"{prefix}{i}", green.support_contained(form))

        # G commutes with the flow
        shift = Fraction(self.sampler.choice([-1, 1, 3]), 4)
        for i, form in enumerate(bulk[:10]):
            for green in greens_pair(self.geometry):
                moved = green(exterior.translate(form, shift)) - exterior.translate(green(form), shift)
                residual = moved.residual(self.arithmetic)
                self.report.add(CheckRecord(f"{green.name} commutes with the flow", f"m{i}", residual,
                                            self.arithmetic.within_tolerance(residual)))


class DifferenceIdentitySuite(BaseSuite):
    name = 'difference_identity'

    def execute(self) -> None:
        bulk = [self.sampler.bulk_field(d) for d in self.sampler.degrees(self.n_samples, range(4))]
        boundary = [self.sampler.boundary_field(d) for d in self.sampler.degrees(self.n_samples, range(3))]
        self.remember('m', bulk)
        self.remember('b', boundary)
        self.record(verify_difference_identity(self.geometry, bulk, self.arithmetic, 'm'))
        self.record(verify_difference_identity(self.geometry, boundary, self.arithmetic, 'b'))

        propagator = causal_propagator(self.geometry)
        up, down = greens_pair(self.geometry)
        for i, form in enumerate(bulk[:10]):
            residual = (propagator(form) - up(form) + down(form)).residual(self.arithmetic)
            self.report.add(CheckRecord("G = G_up - G_down", f"m{i}", residual,
                                        self.arithmetic.within_tolerance(residual)))


class BoundaryRestrictionSuite(BaseSuite):
    name = 'boundary_restriction'

    def execute(self) -> None:
        conditioned = [self.sampler.conditioned_bulk(d) for d in self.sampler.degrees(self.n_samples, range(4))]
        chiral = [self.sampler.chiral_boundary(d) for d in self.sampler.degrees(self.n_samples, (1, 2))]
        self.remember('m', conditioned)
        self.remember('b', chiral)
        for direction in GreensDirection:
            bulk_green = GreensHomotopy(self.geometry, direction)
            boundary_green = GreensHomotopy(self.geometry, direction, SpaceKind.BOUNDARY)
            self.record(verify_preserves_condition(bulk_green, conditioned, self.arithmetic, 'm'))
            self.record(verify_preserves_condition(boundary_green, chiral, self.arithmetic, 'b'))
            self.record(verify_bulk_boundary_compatibility(self.geometry, direction, conditioned,
                                                           self.arithmetic, 'm'))

        # Lorentzian star on boundary 1-forms
        for i, form in enumerate(self.sampler.boundary_field(1) for _ in range(min(self.n_samples, 20))):
            twice = hodge_star_boundary(self.geometry, hodge_star_boundary(self.geometry, form))
            residual = (twice - form).residual(self.arithmetic)
            self.report.add(CheckRecord("** = id", f"s{i}", residual, self.arithmetic.within_tolerance(residual)))
            plus, minus = sd_projectors(self.geometry, form)
            residual = (plus + minus - form).residual(self.arithmetic)
            self.report.add(CheckRecord("P+ + P- = id", f"s{i}", residual, self.arithmetic.within_tolerance(residual)))
        eigen = [f for f in chiral if f.degree == 1]
        self.remember('l', eigen)
        for i, form in enumerate(eigen):
            residual = chiral_residual(self.geometry, form, self.arithmetic)
            self.report.add(CheckRecord("L is the chiral eigenspace", f"l{i}", residual,
                                        self.arithmetic.within_tolerance(residual)))
        coframe = invariant_chiral_coframe(self.geometry)
        residual = chiral_residual(self.geometry, coframe, self.arithmetic)
        self.report.add(CheckRecord("chiral coframe eigenform", "beta", residual,
                                    self.arithmetic.within_tolerance(residual)))
        moved = exterior.translate(coframe, Fraction(1, 2)) - coframe
        residual = moved.residual(self.arithmetic)
        self.report.add(CheckRecord("chiral coframe flow invariant", "beta", residual,
                                    self.arithmetic.within_tolerance(residual)))
