"""Configuration manager for the p-Frobenius toolkit.

Handles loading and validation of the optional JSON configuration file.
"""

import json
import logging
import threading
from pathlib import Path
from typing import Any

from .schema import Config, LOG_LEVELS, OUTPUT_FORMATS

logger = logging.getLogger(__name__)


class ConfigValidationError:
    """Represents a configuration validation error."""

    def __init__(self, path: str, message: str, value: Any = None):
        self.path = path
        self.message = message
        self.value = value

    def __str__(self) -> str:
        if self.value is not None:
            return f"{self.path}: {self.message} (got: {self.value})"
        return f"{self.path}: {self.message}"


class ConfigManager:
    """Manages configuration loading and validation.

    A missing path means "use defaults"; an unreadable or invalid file is
    reported through get_validation_errors() and logged, and the defaults
    are kept.

    Attributes:
        config_path: Path to the configuration file (None = defaults only)
        config: Current configuration object
    """

    def __init__(self, config_path: str | None = None):
        """Initialize ConfigManager.

        Args:
            config_path: Path to configuration file
        """
        self.config_path = Path(config_path) if config_path else None
        self.config: Config = Config.default()
        self._lock = threading.RLock()
        self._validation_errors: list[ConfigValidationError] = []

    def load(self, path: str | None = None) -> Config:
        """Load configuration from file.

        Args:
            path: Optional path override

        Returns:
            Loaded configuration object
        """
        config_path = Path(path) if path else self.config_path

        with self._lock:
            if config_path is None:
                logger.debug("No config file given, using defaults")
                return self.config

            if not config_path.exists():
                logger.warning(f"Config file not found: {config_path}, using defaults")
                self._validation_errors = [
                    ConfigValidationError(str(config_path), "file not found")
                ]
                return self.config

            try:
                with open(config_path, "r", encoding="utf-8") as f:
                    data = json.load(f)

                self._validation_errors = self.validate(data)
                if self._validation_errors:
                    for error in self._validation_errors:
                        logger.warning(f"Config validation: {error}")

                self.config = Config.from_dict(data)
                logger.info(f"Configuration loaded from {config_path}")

            except json.JSONDecodeError as e:
                logger.error(f"Invalid JSON in config file: {e}")
                self._validation_errors = [
                    ConfigValidationError("", f"Invalid JSON: {e}")
                ]
            except (OSError, TypeError, AttributeError) as e:
                logger.error(f"Error loading config: {e}")
                self._validation_errors = [
                    ConfigValidationError("", f"Load error: {e}")
                ]

        return self.config

    def validate(self, data: Any) -> list[ConfigValidationError]:
        """Validate configuration data.

        Args:
            data: Configuration dictionary to validate

        Returns:
            List of validation errors (empty if valid)
        """
        errors: list[ConfigValidationError] = []

        if not isinstance(data, dict):
            errors.append(ConfigValidationError("", "must be a dictionary", type(data).__name__))
            return errors

        for section in data:
            if section not in ("apery", "cache", "output", "verify", "logging"):
                errors.append(ConfigValidationError(section, "unknown section"))

        if "apery" in data:
            errors.extend(self._validate_apery_config("apery", data["apery"]))

        if "cache" in data:
            errors.extend(self._validate_cache_config("cache", data["cache"]))

        if "output" in data:
            errors.extend(self._validate_output_config("output", data["output"]))

        if "verify" in data:
            errors.extend(self._validate_verify_config("verify", data["verify"]))

        if "logging" in data:
            section = data["logging"]
            if not isinstance(section, dict):
                errors.append(ConfigValidationError("logging", "must be a dictionary", type(section).__name__))
            elif "level" in section and str(section["level"]).upper() not in LOG_LEVELS:
                errors.append(ConfigValidationError(
                    "logging.level", f"must be one of {', '.join(LOG_LEVELS)}", section["level"]
                ))

        return errors

    def _validate_int_range(
        self, path: str, data: dict[str, Any], key: str, low: int, high: int
    ) -> list[ConfigValidationError]:
        if key not in data:
            return []
        val = data[key]
        if isinstance(val, bool) or not isinstance(val, int) or val < low or val > high:
            return [ConfigValidationError(
                f"{path}.{key}", f"must be integer between {low} and {high}", val
            )]
        return []

    def _validate_apery_config(self, path: str, data: Any) -> list[ConfigValidationError]:
        """Validate Apery scan configuration."""
        if not isinstance(data, dict):
            return [ConfigValidationError(path, "must be a dictionary", type(data).__name__)]
        errors = self._validate_int_range(path, data, "initial_bound_factor", 1, 1_000_000)
        errors.extend(self._validate_int_range(path, data, "growth_factor", 2, 16))
        return errors

    def _validate_cache_config(self, path: str, data: Any) -> list[ConfigValidationError]:
        """Validate cache configuration."""
        if not isinstance(data, dict):
            return [ConfigValidationError(path, "must be a dictionary", type(data).__name__)]
        errors = self._validate_int_range(path, data, "bernoulli_warmup", 0, 2000)
        errors.extend(self._validate_int_range(path, data, "eulerian_warmup", 0, 200))
        return errors

    def _validate_output_config(self, path: str, data: Any) -> list[ConfigValidationError]:
        """Validate output configuration."""
        if not isinstance(data, dict):
            return [ConfigValidationError(path, "must be a dictionary", type(data).__name__)]
        errors: list[ConfigValidationError] = []
        if "format" in data and data["format"] not in OUTPUT_FORMATS:
            errors.append(ConfigValidationError(
                f"{path}.format", f"must be one of {', '.join(OUTPUT_FORMATS)}", data["format"]
            ))
        if data.get("json_indent") is not None:
            errors.extend(self._validate_int_range(path, data, "json_indent", 0, 8))
        return errors

    def _validate_verify_config(self, path: str, data: Any) -> list[ConfigValidationError]:
        """Validate verify configuration."""
        if not isinstance(data, dict):
            return [ConfigValidationError(path, "must be a dictionary", type(data).__name__)]
        errors: list[ConfigValidationError] = []
        if "mus" in data:
            mus = data["mus"]
            if not isinstance(mus, list) or not all(
                isinstance(mu, int) and not isinstance(mu, bool) and mu >= 0 for mu in mus
            ):
                errors.append(ConfigValidationError(
                    f"{path}.mus", "must be a list of non-negative integers", mus
                ))
        if "lambdas" in data:
            lambdas = data["lambdas"]
            if not isinstance(lambdas, list) or not all(isinstance(lam, str) for lam in lambdas):
                errors.append(ConfigValidationError(
                    f"{path}.lambdas", "must be a list of lambda specifications", lambdas
                ))
        return errors

    def get_validation_errors(self) -> list[ConfigValidationError]:
        """Get validation errors from last load.

        Returns:
            List of validation errors
        """
        return self._validation_errors.copy()
