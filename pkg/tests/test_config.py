import json
import logging
from fractions import Fraction

import pytest
import yaml

from cswzw.config import ConfigManager
from cswzw.config.manager import OUTPUT_DIR_ENV
from cswzw.models.arithmetic import Backend
from cswzw.models.geometry import Chirality, GeometryKind
from cswzw.models.scenario import DEFAULT_SAMPLES, SUITE_NAMES, ScenarioConfig
from cswzw.utils import errors, setup_logging


def _problems(data):
    with pytest.raises(errors.ConfigError) as info:
        ScenarioConfig.from_dict(data)
    return info.value.errors


def test_defaults():
    config = ScenarioConfig.from_dict({})
    assert config.geometry == GeometryKind.CYLINDER
    assert config.chirality == Chirality.PLUS
    assert config.inner_radius == Fraction(1, 4)
    assert config.backend == Backend.EXACT
    assert config.suites == list(SUITE_NAMES)
    assert config.samples_for('greens_identities') == DEFAULT_SAMPLES['default']
    assert config.samples_for('regions_oracle') == 200
    assert config.holonomy_alphas == [Fraction(1), Fraction(0), Fraction(-2), Fraction(7, 2)]
    assert config.holonomy_interval == (Fraction(1, 2), Fraction(1))


def test_explicit_default_replaces_suite_defaults():
    config = ScenarioConfig.from_dict({'samples': {'default': 5, 'causality': 7}})
    assert config.samples_for('regions_oracle') == 5
    assert config.samples_for('causality') == 7
    assert ScenarioConfig.from_dict({'samples': 3}).samples_for('naturality') == 3


def test_problems_name_their_field():
    problems = _problems({
        'geometry': 'torus',
        'samples': {'nonsense': 4, 'causality': 0},
        'suites': ['holonomy', 'bogus'],
        'holonomy': {'alphas': ['1', 'x']},
        'bump': {'interval': ['1/2', '2']},
        'plot': {'selection': ['greens', 'spectrum']},
        'logging': {'level': 'LOUD'},
    })
    text = "\n".join(problems)
    for path in ('geometry:', 'samples.nonsense:', 'samples.causality:', 'suites[1]:',
                 'holonomy.alphas[1]:', 'bump.interval:', 'plot.selection[1]:', 'logging.level:'):
        assert path in text
    assert "unknown suite name bogus" in text


def test_inner_radius_and_interval_checks():
    assert any(p.startswith('inner_radius:') for p in _problems({'inner_radius': '3/2'}))
    assert any('lower end' in p for p in _problems({'holonomy': {'interval': ['1', '1/2']}}))
    assert any(p.startswith('star:') for p in _problems({'star': 'sideways'}))


def test_generator_labels_must_be_unique():
    form = {'space': 'bulk', 'degree': 0, 'shift': 2, 'components': []}
    problems = _problems({'generators': [{'label': 'a', 'form': form}, {'label': 'a', 'form': form}]})
    assert problems == ["generators[1].label: Duplicate generator label a"]
    assert _problems({'generators': [{'label': 'a'}]}) == ["generators[0].form: required field is missing"]


def test_region_boxes_are_checked():
    problems = _problems({'regions': {'slab': [{'tau': ['0']}], 'empty': []}})
    assert any(p.startswith('regions.slab[0].tau:') for p in problems)
    assert any(p.startswith('regions.empty:') for p in problems)


def test_non_mapping_root():
    assert _problems(['geometry'])[0].startswith('<root>:')


def test_yaml_and_json_documents(tmp_path):
    manager = ConfigManager()
    yaml_path = tmp_path / 'scenario.yaml'
    yaml_path.write_text(yaml.safe_dump({'geometry': 'half_space', 'chirality': '-', 'seed': 9}))
    json_path = tmp_path / 'scenario.json'
    json_path.write_text(json.dumps({'backend': 'float', 'tolerance': 1e-8}))
    from_yaml = manager.load_config(yaml_path)
    from_json = manager.load_config(json_path)
    assert from_yaml.geometry == GeometryKind.HALF_SPACE
    assert from_yaml.chirality == Chirality.MINUS
    assert from_yaml.seed == 9
    assert from_json.backend == Backend.FLOAT
    assert from_json.tolerance == 1e-8


def test_document_errors(tmp_path):
    manager = ConfigManager()
    with pytest.raises(errors.ConfigError):
        manager.load_config(tmp_path / 'missing.json')
    broken = tmp_path / 'broken.yaml'
    broken.write_text("geometry: [cylinder\n")
    with pytest.raises(errors.ConfigError):
        manager.load_config(broken)
    listing = tmp_path / 'list.yaml'
    listing.write_text("- cylinder\n")
    with pytest.raises(errors.ConfigError):
        manager.load_config(listing)
    empty = tmp_path / 'empty.yaml'
    empty.write_text("")
    assert manager.load_config(empty).geometry == GeometryKind.CYLINDER


def test_output_dir_precedence(tmp_path, monkeypatch):
    manager = ConfigManager()
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
    assert manager.load_config().output_dir == 'reports'
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / 'env'))
    assert manager.load_config().output_dir == str(tmp_path / 'env')
    overridden = manager.load_config(None, {'output_dir': str(tmp_path / 'cli'), 'seed': None})
    assert overridden.output_dir == str(tmp_path / 'cli')
    assert overridden.seed == 0


def test_saved_scenario_loads_back(tmp_path):
    manager = ConfigManager()
    config = ScenarioConfig.from_dict({'geometry': 'half_space', 'inner_radius': '1/3', 'seed': 4,
                                      'output_dir': str(tmp_path / 'reports')})
    path = manager.save_config(config, tmp_path / 'nested' / 'scenario.yaml')
    loaded = manager.load_config(path)
    assert loaded.to_dict() == config.to_dict()


def test_default_scenario_is_valid():
    document = ConfigManager().get_default_scenario()
    config = ScenarioConfig.from_dict(document)
    assert config.suites == list(SUITE_NAMES)


def test_logging_to_a_rotating_file(tmp_path):
    log_file = tmp_path / 'logs' / 'cswzw.log'
    setup_logging('WARNING', str(log_file))
    logger = logging.getLogger('cswzw.tests')
    logger.info("quiet")
    logger.warning("loud")
    for handler in logging.getLogger().handlers:
        handler.flush()
    text = log_file.read_text()
    assert ' - cswzw.tests - WARNING - loud' in text
    assert 'quiet' not in text
