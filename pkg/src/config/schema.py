"""Configuration schema definitions for the p-Frobenius toolkit.

This module defines dataclasses for all configuration sections:
- AperyConfig: Scan bounds for p-Apery set construction
- CacheConfig: Bernoulli/Eulerian warm-up sizes
- OutputConfig: Default output format
- VerifyConfig: Default exponents and weights for `verify`
- LoggingConfig: Log level
- Config: Root configuration object
"""

from dataclasses import dataclass, field, asdict
from typing import Any
import json

OUTPUT_FORMATS = ("json", "csv", "plain")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class AperyConfig:
    """Configuration for the p-Apery scan.

    Attributes:
        initial_bound_factor: Multiplier of the a_1*a_2 slack added to (p+1)*a_1*a_2
        growth_factor: Factor the denumerant table grows by when too small
    """
    initial_bound_factor: int = 1
    growth_factor: int = 2

    def __post_init__(self):
        """Validate configuration values."""
        if self.initial_bound_factor < 1:
            self.initial_bound_factor = 1
        if self.growth_factor < 2:
            self.growth_factor = 2
        if self.growth_factor > 16:
            self.growth_factor = 16

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AperyConfig":
        return cls(
            initial_bound_factor=data.get("initial_bound_factor", 1),
            growth_factor=data.get("growth_factor", 2)
        )


@dataclass
class CacheConfig:
    """Warm-up sizes for the shared number caches.

    Attributes:
        bernoulli_warmup: Precompute B_0..B_n
        eulerian_warmup: Precompute Eulerian rows 0..n
    """
    bernoulli_warmup: int = 32
    eulerian_warmup: int = 12

    def __post_init__(self):
        """Validate configuration values."""
        if self.bernoulli_warmup < 0:
            self.bernoulli_warmup = 0
        if self.bernoulli_warmup > 2000:
            self.bernoulli_warmup = 2000
        if self.eulerian_warmup < 0:
            self.eulerian_warmup = 0
        if self.eulerian_warmup > 200:
            self.eulerian_warmup = 200

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CacheConfig":
        return cls(
            bernoulli_warmup=data.get("bernoulli_warmup", 32),
            eulerian_warmup=data.get("eulerian_warmup", 12)
        )


@dataclass
class OutputConfig:
    """Output settings.

    Attributes:
        format: Default output format (json, csv, plain)
        json_indent: Indentation for JSON output (None = compact)
    """
    format: str = "json"
    json_indent: int | None = None

    def __post_init__(self):
        """Validate configuration values."""
        if self.format not in OUTPUT_FORMATS:
            self.format = "json"
        if self.json_indent is not None:
            if self.json_indent < 0:
                self.json_indent = 0
            if self.json_indent > 8:
                self.json_indent = 8

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "OutputConfig":
        return cls(
            format=data.get("format", "json"),
            json_indent=data.get("json_indent")
        )


@dataclass
class VerifyConfig:
    """Defaults for the verify command.

    Attributes:
        mus: Power-sum exponents to check
        lambdas: Weight specifications (same grammar as --lambda)
    """
    mus: list[int] = field(default_factory=lambda: list(range(7)))
    lambdas: list[str] = field(default_factory=lambda: ["2", "-1/2"])

    def __post_init__(self):
        """Validate configuration values."""
        self.mus = [mu for mu in self.mus if isinstance(mu, int) and mu >= 0]
        self.lambdas = [str(lam) for lam in self.lambdas]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerifyConfig":
        return cls(
            mus=list(data.get("mus", range(7))),
            lambdas=list(data.get("lambdas", ["2", "-1/2"]))
        )


@dataclass
class LoggingConfig:
    """Logging settings.

    Attributes:
        level: Root log level
    """
    level: str = "WARNING"

    def __post_init__(self):
        """Validate configuration values."""
        self.level = str(self.level).upper()
        if self.level not in LOG_LEVELS:
            self.level = "WARNING"

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "LoggingConfig":
        return cls(level=data.get("level", "WARNING"))


@dataclass
class Config:
    """Root configuration object.

    Attributes:
        apery: p-Apery scan settings
        cache: Cache warm-up settings
        output: Output settings
        verify: verify command defaults
        logging: Logging settings
    """
    apery: AperyConfig = field(default_factory=AperyConfig)
    cache: CacheConfig = field(default_factory=CacheConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "apery": self.apery.to_dict(),
            "cache": self.cache.to_dict(),
            "output": self.output.to_dict(),
            "verify": self.verify.to_dict(),
            "logging": self.logging.to_dict()
        }

    def to_json(self, indent: int = 2) -> str:
        """Convert to JSON string."""
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Config":
        """Create Config from dictionary."""
        return cls(
            apery=AperyConfig.from_dict(data.get("apery", {})),
            cache=CacheConfig.from_dict(data.get("cache", {})),
            output=OutputConfig.from_dict(data.get("output", {})),
            verify=VerifyConfig.from_dict(data.get("verify", {})),
            logging=LoggingConfig.from_dict(data.get("logging", {}))
        )

    @classmethod
    def from_json(cls, json_str: str) -> "Config":
        """Create Config from JSON string."""
        return cls.from_dict(json.loads(json_str))

    @classmethod
    def default(cls) -> "Config":
        """Create default configuration."""
        return cls()
