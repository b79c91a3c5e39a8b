from .base_suite import BaseSuite
from .greens_suites import GreensIdentitiesSuite, DifferenceIdentitySuite, BoundaryRestrictionSuite
from .poisson_suites import PoissonAntisymmetrySuite, CausalitySuite, NaturalitySuite
from .ccr_suites import CCRRelationsSuite, CCRTransportSuite
from .region_suite import RegionsOracleSuite
from .reduction_suites import ReductionSdrSuite, BoundarySdrSuite, HolonomySuite

SUITES = {
    suite.name: suite
    for suite in (
        GreensIdentitiesSuite, DifferenceIdentitySuite, BoundaryRestrictionSuite,
        PoissonAntisymmetrySuite, CausalitySuite, NaturalitySuite,
        CCRRelationsSuite, CCRTransportSuite, RegionsOracleSuite,
        ReductionSdrSuite, BoundarySdrSuite, HolonomySuite,
    )
}

__all__ = [
    'BaseSuite', 'SUITES',
    'GreensIdentitiesSuite', 'DifferenceIdentitySuite', 'BoundaryRestrictionSuite',
    'PoissonAntisymmetrySuite', 'CausalitySuite', 'NaturalitySuite',
    'CCRRelationsSuite', 'CCRTransportSuite', 'RegionsOracleSuite',
    'ReductionSdrSuite', 'BoundarySdrSuite', 'HolonomySuite',
]
