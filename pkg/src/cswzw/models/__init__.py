from .arithmetic import Arithmetic, Backend, format_rational, parse_rational
from .coefficients import CoeffField
from .complexes import ComplexId, ComplexTag, HomCochain
from .form import Form
from .geometry import Chirality, Geometry, GeometryKind
from .region import Region
from .report import CheckRecord, SuiteReport
from .scenario import SUITE_NAMES, ScenarioConfig
from .spaces import Space, SpaceKind

__all__ = [
    'Arithmetic', 'Backend', 'format_rational', 'parse_rational',
    'CoeffField', 'ComplexId', 'ComplexTag', 'HomCochain', 'Form',
    'Chirality', 'Geometry', 'GeometryKind', 'Region',
    'CheckRecord', 'SuiteReport', 'SUITE_NAMES', 'ScenarioConfig',
    'Space', 'SpaceKind',
]
