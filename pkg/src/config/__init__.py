"""Configuration management."""

from .schema import Config, AperyConfig, CacheConfig, OutputConfig, VerifyConfig, LoggingConfig
from .config_manager import ConfigManager, ConfigValidationError

__all__ = [
    "Config",
    "AperyConfig",
    "CacheConfig",
    "OutputConfig",
    "VerifyConfig",
    "LoggingConfig",
    "ConfigManager",
    "ConfigValidationError",
]
