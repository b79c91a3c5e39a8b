import os
import logging
from pathlib import Path
from typing import Optional, Dict, Any

import yaml

from cswzw.models.scenario import DEFAULT_SAMPLES, PLOT_SELECTIONS, SUITE_NAMES, ScenarioConfig
from cswzw.utils import errors

OUTPUT_DIR_ENV = 'CSWZW_OUTPUT_DIR'
DEFAULT_OUTPUT_DIR = 'reports'


class ConfigManager:
    """Reads scenario documents (JSON or YAML) into validated ScenarioConfig objects."""

    def __init__(self, config_file_path: Optional[str] = None):
        self.config_file_path = Path(config_file_path) if config_file_path else None
        self.logger = logging.getLogger(__name__)
        self._config: Optional[ScenarioConfig] = None

    def load_document(self, path=None) -> Dict[str, Any]:
        path = Path(path) if path else self.config_file_path
        if path is None:
            self.logger.info("No scenario file given, using the default scenario")
            return self._get_default_scenario()
        if not path.exists():
            raise errors.ConfigError([f"{path}: file not found"])
        try:
            with open(path, 'r') as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise errors.ConfigError([f"{path}: {e}"])
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise errors.ConfigError([f"{path}: expected a mapping at the top level"])
        return data

    def load_config(self, path=None, overrides: Optional[Dict[str, Any]] = None) -> ScenarioConfig:
        data = self.load_document(path)
        if overrides:
            data = {**data, **{k: v for k, v in overrides.items() if v is not None}}
        config = ScenarioConfig.from_dict(data)
        if config.output_dir is None:
            config.output_dir = self.get_output_dir()
        self._config = config
        self.logger.info(f"Scenario loaded: {config.geometry.value}/{config.chirality.value}, "
                         f"backend {config.backend.value}, {len(config.suites)} suites")
        return config

    def get_config(self) -> ScenarioConfig:
        if self._config is None:
            self._config = self.load_config()
        return self._config

    def get_output_dir(self) -> str:
        return os.getenv(OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR)

    def save_config(self, config: ScenarioConfig, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w') as f:
            yaml.safe_dump(config.to_dict(), f, default_flow_style=False, sort_keys=False)
        self.logger.info(f"Scenario written to {path}")
        return path

    def get_default_scenario(self) -> Dict[str, Any]:
        return self._get_default_scenario()

    def _get_default_scenario(self) -> Dict[str, Any]:
        return {
            'geometry': 'cylinder',
            'chirality': '+',
            'inner_radius': '1/4',
            'backend': 'exact',
            'seed': 0,
            'samples': self._get_default_samples(),
            'suites': list(SUITE_NAMES),
            'plot': {'selection': list(PLOT_SELECTIONS)},
        }

    def _get_default_samples(self) -> Dict[str, int]:
        return dict(DEFAULT_SAMPLES)


# Global instance
_config_manager = None


def get_config_manager() -> ConfigManager:
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager
