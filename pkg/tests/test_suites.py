import pytest

from cswzw.models.report import CheckRecord
from cswzw.models.scenario import SUITE_NAMES, ScenarioConfig
from cswzw.suites import SUITES, BaseSuite


@pytest.fixture(params=['cylinder', 'half_space'])
def small_config(request):
    def build(chirality='+', **extra):
        data = {'geometry': request.param, 'chirality': chirality, 'samples': {'default': 2}}
        data.update(extra)
        return ScenarioConfig.from_dict(data)
    return build


def test_every_suite_is_registered():
    assert set(SUITES) == set(SUITE_NAMES)
    assert all(SUITES[name].name == name for name in SUITE_NAMES)


@pytest.mark.parametrize('name', SUITE_NAMES)
@pytest.mark.parametrize('chirality', ['+', '-'])
@pytest.mark.parametrize('backend', ['exact', 'float'])
def test_suite_passes(small_config, name, chirality, backend):
    report = SUITES[name](small_config(chirality, backend=backend)).run()
    assert report.error is None
    assert report.checks
    assert report.passed, [c.to_dict() for c in report.failures]


def test_holonomy_suite_on_the_half_space_uses_the_cylinder():
    config = ScenarioConfig.from_dict({'geometry': 'half_space', 'suites': ['holonomy']})
    report = SUITES['holonomy'](config).run()
    assert report.passed
    assert 'note' in report.summary
    assert any(c.identity == "holonomy rejected on the half-space" for c in report.checks)


def test_same_seed_same_report(small_config):
    first = SUITES['poisson_antisymmetry'](small_config(seed=4)).run()
    second = SUITES['poisson_antisymmetry'](small_config(seed=4)).run()
    assert first.to_json() == second.to_json()


def test_declared_generators():
    # a top-degree observable is d-closed on its own
    indicator = {'type': 'piecewise', 'knots': ['0', '1'], 'polys': [[], ['1'], []]}
    radial = {'type': 'piecewise', 'knots': ['1/2', '3/4'], 'polys': [[], ['1'], []]}
    form = {
        'space': 'bulk', 'degree': 3, 'shift': 2,
        'components': [{'index': [0, 1, 2], 'terms': [{
            'coef': '1',
            'factors': [indicator, {'type': 'piecewise', 'knots': [], 'polys': [['1']]}, radial],
        }]}],
    }
    config = ScenarioConfig.from_dict({'generators': [{'label': 'top', 'form': form}],
                                       'samples': {'default': 2}})
    report = SUITES['ccr_relations'](config).run()
    assert report.error is None
    assert report.passed, [c.to_dict() for c in report.failures]
    assert report.summary['generators']['labels'] == ['top']


class FailingSuite(BaseSuite):
    name = 'failing'

    def execute(self) -> None:
        samples = [self.sampler.bulk_field(1), self.sampler.bulk_field(2)]
        self.remember('m', samples)
        self.report.add(CheckRecord("always fails", "m1", 1.0, False))
        self.report.add(CheckRecord("passes", "m0", 0.0, True))


class RaisingSuite(BaseSuite):
    name = 'raising'

    def execute(self) -> None:
        raise RuntimeError("boom")


def test_failures_carry_their_sample():
    report = FailingSuite(ScenarioConfig()).run()
    assert not report.passed
    failure = report.failures[0]
    assert failure.detail['replay'][0]['degree'] == 2
    assert 'replay' not in report.checks[1].detail


def test_exceptions_become_report_errors():
    report = RaisingSuite(ScenarioConfig()).run()
    assert not report.passed
    assert report.error == "RuntimeError: boom"
    assert report.to_dict()['error'] == "RuntimeError: boom"
