"""
Configuration management using dataclasses.

Every knob has a default that works on a desk machine; environment variables
(optionally loaded from a ``.env`` file by the CLI) override them.

Usage:
    >>> config = AppConfig.from_env()
    >>> config.numeric.jacobi_tolerance
    1e-12
    >>> config.verify.default_trials
    50
"""

import os
from dataclasses import dataclass, field


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


# ========================================
# Numeric Configuration
# ========================================


@dataclass
class NumericConfig:
    """Tolerances for floating-point spectra."""

    jacobi_tolerance: float = 1e-12  # off-diagonal Frobenius norm at convergence
    jacobi_max_sweeps: int = 100
    multiplicity_tolerance: float = 1e-8  # eigenvalues closer than this merge
    oracle_tolerance: float = 1e-8  # closed form vs numeric spectrum
    reproduce_tolerance: float = 1e-3  # published values carry four decimals

    def validate(self) -> None:
        """Validate numeric configuration.

        Raises:
            ValueError: If a tolerance is not positive.
        """
        for name in ("jacobi_tolerance", "multiplicity_tolerance",
                     "oracle_tolerance", "reproduce_tolerance"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if self.jacobi_max_sweeps < 1:
            raise ValueError("jacobi_max_sweeps must be >= 1")


# ========================================
# Search Configuration
# ========================================


@dataclass
class SearchConfig:
    """Regular-graph enumeration and its on-disk cache."""

    cache_dir: str = field(
        default_factory=lambda: os.path.expanduser(
            os.getenv("SPECTRAJOIN_CACHE_DIR", "~/.cache/spectrajoin")
        )
    )
    cache_enabled: bool = field(
        default_factory=lambda: _env_bool("SPECTRAJOIN_CACHE", "true")
    )
    max_workers: int = field(
        default_factory=lambda: int(os.getenv("SPECTRAJOIN_WORKERS", "1"))
    )
    max_vertices: int = 10
    degrees: tuple = (3, 4, 5)  # searched when looking for a cospectral pair

    def validate(self) -> None:
        if self.max_workers < 1:
            raise ValueError("max_workers must be >= 1")
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")


# ========================================
# Verification Configuration
# ========================================


@dataclass
class VerifyConfig:
    """Sampling for theorem checks and randomised runs."""

    extra_points: int = 2  # sample points beyond degree + 1, checked not fitted
    default_seed: int = field(
        default_factory=lambda: int(os.getenv("SPECTRAJOIN_SEED", "1"))
    )
    default_trials: int = 50
    default_max_n: int = 6

    def validate(self) -> None:
        if self.extra_points < 1:
            raise ValueError("extra_points must be >= 1")
        if self.default_trials < 1:
            raise ValueError("default_trials must be >= 1")
        if self.default_max_n < 1:
            raise ValueError("default_max_n must be >= 1")


# ========================================
# Logging Configuration
# ========================================


@dataclass
class LoggingConfig:
    """Logging configuration. Records go to stderr so stdout stays JSON."""

    level: str = field(
        default_factory=lambda: os.getenv("LOG_LEVEL", "WARNING").upper()
    )
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    def validate(self) -> None:
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if self.level not in valid_levels:
            raise ValueError(f"Invalid log level: {self.level}")


# ========================================
# Application Configuration (Main)
# ========================================


@dataclass
class AppConfig:
    """Complete application configuration.

    Aggregates the numeric, search, verify and logging sub-configurations.
    """

    app_version: str = "1.0.0"

    numeric: NumericConfig = field(default_factory=NumericConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_env(cls) -> "AppConfig":
        """Create configuration from environment variables.

        Raises:
            ValueError: If any value is invalid.
        """
        config = cls()
        config.validate()
        return config

    def validate(self) -> None:
        self.numeric.validate()
        self.search.validate()
        self.verify.validate()
        self.logging.validate()
