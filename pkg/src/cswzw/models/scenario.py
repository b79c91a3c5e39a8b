from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from cswzw.models.arithmetic import FLOAT_TOLERANCE, Backend, format_rational, parse_rational
from cswzw.models.geometry import DEFAULT_INNER_RADIUS, Chirality, GeometryKind
from cswzw.utils import errors

SUITE_NAMES = (
    'greens_identities',
    'difference_identity',
    'boundary_restriction',
    'poisson_antisymmetry',
    'causality',
    'naturality',
    'ccr_relations',
    'ccr_transport',
    'regions_oracle',
    'reduction_sdr',
    'boundary_sdr',
    'holonomy',
)

DEFAULT_SAMPLES = {
    'default': 100,
    'causality': 50,
    'naturality': 50,
    'regions_oracle': 200,
}

PLOT_SELECTIONS = ('greens', 'holonomy', 'coframe')
STAR_CONVENTIONS = ('koszul', 'plain')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


def _default_holonomy() -> Dict[str, Any]:
    return {'alphas': ['1', '0', '-2', '7/2'], 'interval': ['1/2', '1']}


def _default_bump() -> Dict[str, Any]:
    return {'interval': ['1/2', '1'], 'time_interval': ['0', '1']}


@dataclass
class ScenarioConfig:
    # One verification scenario, as read from a JSON/YAML document
    geometry: GeometryKind = GeometryKind.CYLINDER
    chirality: Chirality = Chirality.PLUS
    inner_radius: Fraction = DEFAULT_INNER_RADIUS
    backend: Backend = Backend.EXACT
    tolerance: float = FLOAT_TOLERANCE
    seed: int = 0
    samples: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_SAMPLES))
    suites: List[str] = field(default_factory=lambda: list(SUITE_NAMES))
    regions: Dict[str, List[dict]] = field(default_factory=dict)
    generators: List[dict] = field(default_factory=list)
    holonomy: Dict[str, Any] = field(default_factory=_default_holonomy)
    bump: Dict[str, Any] = field(default_factory=_default_bump)
    star: str = 'koszul'
    output_dir: Optional[str] = None
    plot: Dict[str, Any] = field(default_factory=lambda: {'selection': list(PLOT_SELECTIONS)})
    logging: Dict[str, Any] = field(default_factory=lambda: {'level': 'INFO', 'file': None})
    max_workers: int = 1

    def samples_for(self, suite: str) -> int:
        return int(self.samples.get(suite, self.samples.get('default', DEFAULT_SAMPLES['default'])))

    @property
    def holonomy_alphas(self) -> List[Fraction]:
        return [parse_rational(a) for a in self.holonomy.get('alphas', [])]

    @property
    def holonomy_interval(self):
        lo, hi = self.holonomy.get('interval', _default_holonomy()['interval'])
        return parse_rational(lo), parse_rational(hi)

    @property
    def bump_interval(self):
        lo, hi = self.bump.get('interval', _default_bump()['interval'])
        return parse_rational(lo), parse_rational(hi)

    @property
    def bump_time_interval(self):
        lo, hi = self.bump.get('time_interval', _default_bump()['time_interval'])
        return parse_rational(lo), parse_rational(hi)

    def to_dict(self) -> dict:
        return {
            'geometry': self.geometry.value,
            'chirality': self.chirality.value,
            'inner_radius': format_rational(self.inner_radius),
            'backend': self.backend.value,
            'tolerance': self.tolerance,
            'seed': self.seed,
            'samples': dict(self.samples),
            'suites': list(self.suites),
            'regions': self.regions,
            'generators': self.generators,
            'holonomy': self.holonomy,
            'bump': self.bump,
            'star': self.star,
            'output_dir': self.output_dir,
            'plot': self.plot,
            'logging': self.logging,
            'max_workers': self.max_workers,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ScenarioConfig':
        """Build a validated config; every problem is reported with its field path."""
        if not isinstance(data, dict):
            raise errors.ConfigError([f"<root>: expected a mapping, got {type(data).__name__}"])
        problems: List[str] = []
        config = cls()

        def pick(key, convert, path=None):
            if key not in data:
                return
            try:
                setattr(config, key, convert(data[key]))
            except (ValueError, TypeError, ZeroDivisionError) as e:
                problems.append(f"{path or key}: {errors.INVALID_VALUE.format(value=data[key])} ({e})")

        pick('geometry', GeometryKind)
        pick('chirality', Chirality)
        pick('inner_radius', parse_rational)
        pick('backend', Backend)
        pick('tolerance', float)
        pick('seed', int)
        pick('output_dir', lambda v: None if v is None else str(v))
        pick('max_workers', int)
        pick('star', str)

        if not 0 < config.inner_radius < 1:
            problems.append(f"inner_radius: must lie strictly between 0 and 1, got {config.inner_radius}")
        if config.tolerance < 0:
            problems.append("tolerance: must be non-negative")
        if config.max_workers < 1:
            problems.append("max_workers: must be at least 1")
        if config.star not in STAR_CONVENTIONS:
            problems.append(f"star: {errors.INVALID_VALUE.format(value=config.star)}")

        if 'samples' in data:
            samples = data['samples']
            if isinstance(samples, int):
                samples = {'default': samples}
            if not isinstance(samples, dict):
                problems.append("samples: expected a mapping of suite name to count")
            else:
                # an explicit default replaces the per-suite defaults too
                merged = {} if 'default' in samples else dict(DEFAULT_SAMPLES)
                for name, count in samples.items():
                    if name != 'default' and name not in SUITE_NAMES:
                        problems.append(f"samples.{name}: {errors.UNKNOWN_SUITE.format(name=name)}")
                    elif not isinstance(count, int) or count < 1:
                        problems.append(f"samples.{name}: expected a positive integer")
                    else:
                        merged[name] = count
                config.samples = merged

        if 'suites' in data:
            suites = data['suites']
            if not isinstance(suites, list):
                problems.append("suites: expected a list of suite names")
            else:
                for i, name in enumerate(suites):
                    if name not in SUITE_NAMES:
                        problems.append(f"suites[{i}]: {errors.UNKNOWN_SUITE.format(name=name)}")
                config.suites = [s for s in suites if s in SUITE_NAMES]

        if 'regions' in data:
            regions = data['regions']
            if not isinstance(regions, dict):
                problems.append("regions: expected a mapping of region name to boxes")
            else:
                for name, boxes in regions.items():
                    problems.extend(_check_boxes(f"regions.{name}", boxes))
                config.regions = regions

        if 'generators' in data:
            generators = data['generators']
            if not isinstance(generators, list):
                problems.append("generators: expected a list")
            else:
                labels = set()
                for i, g in enumerate(generators):
                    if not isinstance(g, dict) or 'form' not in g:
                        problems.append(f"generators[{i}].form: {errors.MISSING_FIELD}")
                        continue
                    label = g.get('label', f"x{i}")
                    if label in labels:
                        problems.append(f"generators[{i}].label: {errors.DUPLICATE_LABEL.format(label=label)}")
                    labels.add(label)
                config.generators = generators

        if 'holonomy' in data:
            holonomy = dict(_default_holonomy())
            holonomy.update(data['holonomy'] or {})
            for i, alpha in enumerate(holonomy.get('alphas', [])):
                problems.extend(_check_rational(f"holonomy.alphas[{i}]", alpha))
            problems.extend(_check_interval('holonomy.interval', holonomy.get('interval'), Fraction(0), Fraction(1)))
            config.holonomy = holonomy

        if 'bump' in data:
            bump = dict(_default_bump())
            bump.update(data['bump'] or {})
            problems.extend(_check_interval('bump.interval', bump.get('interval'), Fraction(0), Fraction(1)))
            problems.extend(_check_interval('bump.time_interval', bump.get('time_interval'), None, None))
            config.bump = bump

        if 'plot' in data:
            plot = data['plot'] or {}
            selection = plot.get('selection', [])
            for i, name in enumerate(selection):
                if name not in PLOT_SELECTIONS:
                    problems.append(f"plot.selection[{i}]: {errors.INVALID_VALUE.format(value=name)}")
            config.plot = {'selection': list(selection)}

        if 'logging' in data:
            log_config = {'level': 'INFO', 'file': None}
            log_config.update(data['logging'] or {})
            if str(log_config['level']).upper() not in LOG_LEVELS:
                problems.append(f"logging.level: {errors.INVALID_VALUE.format(value=log_config['level'])}")
            config.logging = log_config

        if problems:
            raise errors.ConfigError(problems)
        return config


def _check_rational(path: str, value) -> List[str]:
    try:
        parse_rational(value)
    except (ValueError, TypeError, ZeroDivisionError):
        return [f"{path}: {errors.INVALID_VALUE.format(value=value)}"]
    return []


def _check_interval(path: str, value, lo: Optional[Fraction], hi: Optional[Fraction]) -> List[str]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        return [f"{path}: expected [lo, hi]"]
    problems = _check_rational(f"{path}[0]", value[0]) + _check_rational(f"{path}[1]", value[1])
    if problems:
        return problems
    a, b = parse_rational(value[0]), parse_rational(value[1])
    if not a < b:
        return [f"{path}: lower end must be below the upper end"]
    if (lo is not None and a < lo) or (hi is not None and b > hi):
        return [f"{path}: must lie inside [{lo}, {hi}]"]
    return []


def _check_boxes(path: str, boxes) -> List[str]:
    if isinstance(boxes, dict):
        boxes = boxes.get('boxes')
    if not isinstance(boxes, list) or not boxes:
        return [f"{path}: expected a non-empty list of boxes"]
    problems = []
    for i, box in enumerate(boxes):
        if not isinstance(box, dict):
            problems.append(f"{path}[{i}]: expected a mapping of direction to [lo, hi]")
            continue
        for direction, interval in box.items():
            if not isinstance(interval, (list, tuple)) or len(interval) != 2:
                problems.append(f"{path}[{i}].{direction}: expected [lo, hi]")
                continue
            for j, end in enumerate(interval):
                if end is not None:
                    problems.extend(_check_rational(f"{path}[{i}].{direction}[{j}]", end))
    return problems
