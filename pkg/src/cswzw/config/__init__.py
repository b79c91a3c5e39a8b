from .manager import ConfigManager, get_config_manager

__all__ = ['ConfigManager', 'get_config_manager']
