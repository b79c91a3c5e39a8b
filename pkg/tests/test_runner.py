import json

import pytest

from cswzw.models.scenario import ScenarioConfig
from cswzw.services.plot_data import GRID_POINTS, emit_plot_data
from cswzw.services.runner import SuiteRunner
from cswzw.utils import errors

CHEAP_SUITES = ['holonomy', 'regions_oracle', 'difference_identity']


def _config(tmp_path, name, **extra):
    data = {'samples': {'default': 2}, 'suites': CHEAP_SUITES, 'output_dir': str(tmp_path / name)}
    data.update(extra)
    return ScenarioConfig.from_dict(data)


def test_run_writes_one_report_per_suite(tmp_path):
    summary = SuiteRunner(_config(tmp_path, 'out')).run()
    assert summary.passed
    out = tmp_path / 'out'
    for name in CHEAP_SUITES:
        report = json.loads((out / f"{name}.json").read_text())
        assert report['suite'] == name
        assert report['pass'] is True
        assert report['checks']
    totals = json.loads((out / 'summary.json').read_text())
    assert [s['suite'] for s in totals['suites']] == CHEAP_SUITES


def test_reports_are_byte_identical_across_runs(tmp_path):
    SuiteRunner(_config(tmp_path, 'first', seed=3)).run()
    SuiteRunner(_config(tmp_path, 'second', seed=3, max_workers=3)).run()
    for name in CHEAP_SUITES + ['summary']:
        first = (tmp_path / 'first' / f"{name}.json").read_bytes()
        second = (tmp_path / 'second' / f"{name}.json").read_bytes()
        assert first == second


def test_unknown_suite_is_a_config_error(tmp_path):
    with pytest.raises(errors.ConfigError) as info:
        SuiteRunner(_config(tmp_path, 'out')).run(['holonomy', 'nope'])
    assert info.value.errors == ["suite: unknown suite name nope"]


def test_selected_suites_override_the_scenario(tmp_path):
    summary = SuiteRunner(_config(tmp_path, 'out')).run(['holonomy'])
    assert [r.suite for r in summary.reports] == ['holonomy']
    assert not (tmp_path / 'out' / 'regions_oracle.json').exists()


def test_empty_plot_selection_writes_nothing(tmp_path):
    config = _config(tmp_path, 'plots', plot={'selection': []})
    assert emit_plot_data(config) == []
    assert not (tmp_path / 'plots').exists()


def test_plot_tables(tmp_path):
    config = _config(tmp_path, 'plots', geometry='half_space')
    written = emit_plot_data(config)
    assert sorted(p.name for p in written) == ['coframe.csv', 'greens.csv', 'holonomy.csv']
    greens = (tmp_path / 'plots' / 'greens.csv').read_text().splitlines()
    assert greens[0] == 'tau,green_up,cumulative'
    assert len(greens) == GRID_POINTS + 1
    for line in greens[1:]:
        _, green_up, cumulative = (float(v) for v in line.split(','))
        assert green_up == pytest.approx(cumulative)
    holonomy = (tmp_path / 'plots' / 'holonomy.csv').read_text().splitlines()
    assert holonomy[0] == 'rho,omega_density,K_omega'
