"""Settings management for polyharm."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Literal

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_CONFIG_PATH = Path.home() / ".polyharm" / "config.yaml"


class Settings(BaseSettings):
    """Numeric defaults shared by the library and the CLI."""

    model_config = SettingsConfigDict(
        env_prefix="POLYHARM_",
        env_file=".env",
        extra="ignore",
    )

    # Fundamental function evaluation
    series_tol: float = Field(
        default=1e-12,
        gt=0,
        description="Relative tail tolerance of the series strategy",
    )
    series_max_terms: int = Field(
        default=10_000,
        gt=0,
        description="Term cap of the series strategy",
    )
    contour_nodes: int = Field(
        default=512,
        gt=8,
        description="Initial trapezoid nodes on the contour",
    )
    contour_max_nodes: int = Field(
        default=65_536,
        gt=8,
        description="Node cap while doubling the contour rule",
    )
    root_tol: float = Field(
        default=1e-9,
        ge=0,
        description="Tolerance for grouping repeated floating exponents",
    )

    # Taylor analytics
    radius_zero_threshold: float = Field(
        default=1e-9,
        gt=0,
        description="Root-test estimates below this report an infinite radius",
    )
    remainder_tol: float = Field(
        default=1e-10,
        gt=0,
        description="Absolute tolerance of the adaptive remainder quadrature",
    )
    remainder_max_depth: int = Field(
        default=20,
        gt=0,
        description="Bisection depth cap of the remainder quadrature",
    )

    # Sphere quadrature and truncation
    quad_degree: int = Field(
        default=32,
        ge=1,
        description="Band limit resolved exactly by the sphere quadrature",
    )
    N: int = Field(default=40, ge=1, description="Number of log-derivatives in a jet")
    J: int = Field(default=20, ge=1, description="Largest extension coefficient index")
    K_max: int = Field(default=12, ge=0, description="Largest harmonic degree")

    # Runtime
    threads: int = Field(default=1, ge=1, description="Worker threads for grid evaluation")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Log level for library diagnostics",
    )

    @classmethod
    def load_from_yaml(cls, config_path: Path | None = None) -> Settings:
        """Load settings from YAML config file, with environment variable overrides."""
        config_path = config_path or DEFAULT_CONFIG_PATH

        yaml_config = {}
        if config_path.exists():
            with open(config_path) as f:
                yaml_config = yaml.safe_load(f) or {}

        return cls(**yaml_config)

    def save_to_yaml(self, config_path: Path | None = None) -> Path:
        """Save settings to YAML config file."""
        config_path = config_path or DEFAULT_CONFIG_PATH
        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, "w") as f:
            yaml.safe_dump(self.model_dump(), f, default_flow_style=False, sort_keys=True)
        return config_path


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings.load_from_yaml()


def create_default_config() -> Path:
    """Create default configuration file if it doesn't exist."""
    config_path = DEFAULT_CONFIG_PATH
    config_path.parent.mkdir(parents=True, exist_ok=True)

    if not config_path.exists():
        default_config = """\
# polyharm configuration
# Every key can also be set through a POLYHARM_<KEY> environment variable.

# Series strategy for fundamental functions
series_tol: 1.0e-12
series_max_terms: 10000

# Contour strategy: initial nodes, doubled until two rules agree
contour_nodes: 512
contour_max_nodes: 65536

# Sphere quadrature band limit
quad_degree: 32

# Truncation of the continuation: log-derivatives, coefficient index, harmonic degree
N: 40
J: 20
K_max: 12

threads: 1
log_level: WARNING
"""
        config_path.write_text(default_config)

    return config_path
