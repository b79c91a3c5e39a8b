"""
CSV tables for external plotting: the forward Green's homotopy of a time
bump, the radial profiles of the holonomy observable and its homotopy, and
the components of the invariant chiral coframe.
"""

import logging
from pathlib import Path
from typing import Callable, Dict, List

import numpy

from cswzw.models.geometry import Geometry, GeometryKind
from cswzw.models.scenario import ScenarioConfig
from cswzw.services.chirality import invariant_chiral_coframe
from cswzw.services.greens import GreensDirection, GreensHomotopy
from cswzw.services.reduction import UnitBump, radial_profiles, time_bump_form

logger = logging.getLogger(__name__)

GRID_POINTS = 41


def greens_table(geometry: Geometry, config: ScenarioConfig) -> Dict[str, object]:
    """G_up(w dtau) along tau next to the cumulative integral of w."""
    bump = UnitBump.inside(*config.bump_time_interval)
    image = GreensHomotopy(geometry, GreensDirection.FORWARD)(time_bump_form(geometry, bump))
    field = image.component(())
    lo, hi = float(bump.lo), float(bump.hi)
    taus = numpy.linspace(lo - 0.25, hi + 0.25, GRID_POINTS)
    origin = [0.0] * (geometry.bulk.dim - 1)
    rows = [(t, field.evaluate([t] + origin), float(bump.cumulative.evaluate(t))) for t in taus]
    return {'header': 'tau,green_up,cumulative', 'rows': rows}


def holonomy_table(geometry: Geometry, config: ScenarioConfig) -> Dict[str, object]:
    if not geometry.is_cylinder:
        geometry = Geometry(GeometryKind.CYLINDER, geometry.chirality, geometry.inner_radius)
    interval = config.holonomy_interval
    points = numpy.linspace(0.0, 1.0, GRID_POINTS)
    rows = radial_profiles(geometry, interval, UnitBump.inside(*interval), points)
    return {'header': 'rho,omega_density,K_omega', 'rows': rows}


def coframe_table(geometry: Geometry, config: ScenarioConfig) -> Dict[str, object]:
    coframe = invariant_chiral_coframe(geometry)
    tau_part, spatial_part = coframe.component((0,)), coframe.component((1,))
    lo = 0.0 if geometry.is_cylinder else -1.0
    rows = []
    for t in numpy.linspace(-1.0, 1.0, 9):
        for x in numpy.linspace(lo, lo + 1.0, 9):
            rows.append((t, x, tau_part.evaluate((t, x)), spatial_part.evaluate((t, x))))
    return {'header': 'tau,x,beta_tau,beta_x', 'rows': rows}


TABLES: Dict[str, Callable[[Geometry, ScenarioConfig], Dict[str, object]]] = {
    'greens': greens_table,
    'holonomy': holonomy_table,
    'coframe': coframe_table,
}


def emit_plot_data(config: ScenarioConfig, output_dir=None) -> List[Path]:
    """Write one CSV per selected table; an empty selection writes nothing."""
    selection = config.plot.get('selection', [])
    if not selection:
        logger.info("No plot data selected")
        return []
    geometry = Geometry(config.geometry, config.chirality, config.inner_radius)
    out = Path(output_dir or config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in selection:
        table = TABLES[name](geometry, config)
        path = out / f"{name}.csv"
        numpy.savetxt(path, numpy.asarray(table['rows'], dtype=float), delimiter=',',
                      header=table['header'], comments='', fmt='%.12g')
        logger.info(f"Plot data written: {path}")
        written.append(path)
    return written
