import json

import pytest
from click.testing import CliRunner

from cswzw import __version__
from cswzw.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / 'scenario.json'
    path.write_text(json.dumps({'samples': {'default': 2}, 'suites': ['holonomy'],
                                'output_dir': str(tmp_path / 'reports')}))
    return path


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_validate(runner, scenario_file):
    result = runner.invoke(cli, ['validate', str(scenario_file)])
    assert result.exit_code == 0
    assert 'is valid' in result.output


def test_invalid_scenario_exits_with_two(runner, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'geometry': 'torus', 'suites': ['nope']}))
    result = runner.invoke(cli, ['validate', str(path)])
    assert result.exit_code == 2
    assert 'suites[0]' in result.output


def test_run(runner, scenario_file, tmp_path):
    out = tmp_path / 'cli-reports'
    result = runner.invoke(cli, ['run', str(scenario_file), '--out', str(out)])
    assert result.exit_code == 0, result.output
    assert (out / 'holonomy.json').exists()
    assert (out / 'summary.json').exists()
    assert 'holonomy' in result.output


def test_run_unknown_suite(runner, scenario_file):
    result = runner.invoke(cli, ['run', str(scenario_file), '--suite', 'nope'])
    assert result.exit_code == 2


def test_plot_data(runner, scenario_file, tmp_path):
    out = tmp_path / 'plots'
    result = runner.invoke(cli, ['plot-data', str(scenario_file), '--out', str(out)])
    assert result.exit_code == 0, result.output
    assert (out / 'greens.csv').exists()


def test_config_sample(runner, tmp_path):
    result = runner.invoke(cli, ['config', 'sample'])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document['geometry'] == 'cylinder'
    target = tmp_path / 'sample.json'
    result = runner.invoke(cli, ['config', 'sample', '-o', str(target)])
    assert result.exit_code == 0
    assert json.loads(target.read_text()) == document


def test_config_show_and_suites(runner, scenario_file):
    shown = runner.invoke(cli, ['config', 'show', str(scenario_file)])
    assert shown.exit_code == 0
    assert 'geometry: cylinder' in shown.output
    listed = runner.invoke(cli, ['config', 'suites', str(scenario_file)])
    assert listed.exit_code == 0
    assert 'regions_oracle' in listed.output
