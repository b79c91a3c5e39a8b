import logging

import pytest

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.geometry import Geometry
from cswzw.services.sampling import FormSampler, suite_rng

GEOMETRIES = [
    ('cylinder', '+'),
    ('cylinder', '-'),
    ('half_space', '+'),
    ('half_space', '-'),
]


@pytest.fixture(params=GEOMETRIES, ids=lambda p: f"{p[0]}{p[1]}")
def geometry(request):
    kind, chirality = request.param
    return Geometry.from_names(kind, chirality)


@pytest.fixture
def cylinder():
    return Geometry.from_names('cylinder', '+')


@pytest.fixture
def exact():
    return Arithmetic.exact()


@pytest.fixture
def sampler(geometry, exact):
    return FormSampler(geometry, suite_rng(0, 'tests'), exact)


@pytest.fixture(autouse=True)
def restore_root_logging():
    # commands replace the root handlers; put the test runner's back
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
