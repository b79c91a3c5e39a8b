"""
Suites for the strong deformation retracts: LinObs onto the base
observables, collar observables onto the chiral boson, and the holonomy
example on the cylinder.
"""

from fractions import Fraction

from cswzw.models.geometry import Geometry, GeometryKind
from cswzw.models.region import Region
from cswzw.models.report import CheckRecord
from cswzw.services.reduction import (
    UnitBump,
    holonomy_demo,
    is_interior,
    restrict_interior,
    verify_boundary_sdr,
    verify_intertwining,
    verify_kappa_pairing,
    verify_reduction_sdr,
    verify_sub_arc_naturality,
)
from cswzw.services.sampling import bump_intervals
from cswzw.suites.base_suite import BaseSuite
from cswzw.utils import errors

INTERIOR_RADII = (Fraction(1, 2), Fraction(3, 4))


class ReductionSdrSuite(BaseSuite):
    name = 'reduction_sdr'

    def execute(self) -> None:
        bump = UnitBump.inside(*self.config.bump_time_interval)
        self.report.summary['bump'] = bump.to_dict()
        bulk = [self.sampler.lin_obs(d) for d in self.sampler.degrees(self.n_samples, range(4))]
        base = [self.sampler.base_obs(d) for d in self.sampler.degrees(self.n_samples, range(3))]
        self.remember('m', bulk)
        self.remember('b', base)
        self.record(verify_reduction_sdr(self.geometry, bump, bulk, base, self.arithmetic))
        pairs = [self.sampler.complementary_pair(self.sampler.lin_obs, 4) for _ in range(self.n_samples)]
        self.remember('p', pairs)
        self.record(verify_intertwining(self.geometry, pairs, self.arithmetic))

        base_space = self.geometry.base
        inside = Region(base_space, (((None, None), INTERIOR_RADII),))
        self.check("interior base region", "inside", is_interior(inside))
        self.check("whole base is not interior", "whole", not is_interior(Region.whole(base_space)))
        self.expect_error("restriction needs an interior region", errors.PreconditionError,
                          lambda: restrict_interior(self.geometry, base[0], Region.whole(base_space)))


class BoundarySdrSuite(BaseSuite):
    name = 'boundary_sdr'

    def execute(self) -> None:
        bump = UnitBump.inside(*self.config.bump_interval)
        self.report.summary['bump'] = bump.to_dict()
        bosons = [self.sampler.chiral_boson() for _ in range(self.n_samples)]
        collar = [self.sampler.collar_obs(d) for d in self.sampler.degrees(self.n_samples, range(3))]
        self.remember('c', collar)
        self.record(verify_boundary_sdr(self.geometry, bump, bosons, collar, self.arithmetic))
        pairs = [(self.sampler.chiral_boson(), self.sampler.chiral_boson()) for _ in range(self.n_samples)]
        self.record(verify_kappa_pairing(self.geometry, bump, pairs, self.arithmetic))

        circle = self.geometry.boundary_circle
        lo, hi = (Fraction(1, 8), Fraction(5, 8)) if self.geometry.is_cylinder else (Fraction(-1, 2), Fraction(1, 2))
        arc = Region(circle, (((lo, hi),),))
        samples = [self.sampler.arc_function(lo, hi) for _ in range(min(self.n_samples, 20))]
        self.record(verify_sub_arc_naturality(self.geometry, bump, samples, arc, Region.whole(circle),
                                              self.arithmetic))


class HolonomySuite(BaseSuite):
    name = 'holonomy'

    def execute(self) -> None:
        geometry = self.geometry
        if not geometry.is_cylinder:
            geometry = Geometry(GeometryKind.CYLINDER, self.geometry.chirality, self.geometry.inner_radius)
            self.report.summary['note'] = "holonomy needs a circle; evaluated on the cylinder"
            self.expect_error("holonomy rejected on the half-space", errors.PreconditionError,
                              lambda: holonomy_demo(self.geometry, 1, arithmetic=self.arithmetic))

        interval = self.config.holonomy_interval
        results = []
        for alpha in self.config.holonomy_alphas:
            result = holonomy_demo(geometry, alpha, interval, arithmetic=self.arithmetic)
            results.append(result.to_dict())
            sample_id = f"alpha={alpha}"
            residual = self.arithmetic.magnitude(result.pairing + result.alpha)
            self.report.add(CheckRecord("ev(omega, A) = -alpha", sample_id, residual,
                                        self.arithmetic.within_tolerance(residual)))
            residual = self.arithmetic.magnitude(result.lambda_value - 1)
            self.report.add(CheckRecord("lambda(omega) = 1", sample_id, residual,
                                        self.arithmetic.within_tolerance(residual)))
            self.report.add(CheckRecord("kappa lambda omega = omega up to dK + Kd", sample_id,
                                        result.zigzag_residual,
                                        self.arithmetic.within_tolerance(result.zigzag_residual)))
        self.report.summary['holonomy'] = results

        for lo, hi in bump_intervals(10):
            bump = UnitBump.inside(lo, hi)
            residual = abs(float(bump.half_identity() - Fraction(1, 2))) + abs(float(bump.total - 1))
            self.report.add(CheckRecord("int w (int_x w) = 1/2", f"({lo},{hi})", residual, residual == 0))
