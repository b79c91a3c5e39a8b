from .exterior import d, wedge, integrate, fiber_integrate, boundary_restrict
from .homotopy import member, operator_boundary, cohomology_small
from .greens import GreensDirection, GreensHomotopy, greens_pair, causal_propagator
from .chirality import hodge_star_boundary, sd_projectors, invariant_chiral_coframe
from .regions import j_sets, is_convex, is_disjoint, is_cauchy
from .poisson import Pairing, PairingKind, ev, tau_zero, sigma_zero, upsilon_zero
from .reduction import UnitBump, kappa, lambda_map, pi_star, omega_star, holonomy_demo
from .ccr import GeneratorSet, CCRElement, Transport

__all__ = [
    'd', 'wedge', 'integrate', 'fiber_integrate', 'boundary_restrict',
    'member', 'operator_boundary', 'cohomology_small',
    'GreensDirection', 'GreensHomotopy', 'greens_pair', 'causal_propagator',
    'hodge_star_boundary', 'sd_projectors', 'invariant_chiral_coframe',
    'j_sets', 'is_convex', 'is_disjoint', 'is_cauchy',
    'Pairing', 'PairingKind', 'ev', 'tau_zero', 'sigma_zero', 'upsilon_zero',
    'UnitBump', 'kappa', 'lambda_map', 'pi_star', 'omega_star', 'holonomy_demo',
    'GeneratorSet', 'CCRElement', 'Transport',
]
