"""Tests for settings and run configuration."""

from __future__ import annotations

import subprocess
import sys

import numpy as np
import pytest
import yaml
from numpy.testing import assert_allclose
from pydantic import ValidationError

from polyharm.config import settings as settings_module
from polyharm.config.run import (
    ExponentSpec,
    ExtendParams,
    GridSpec,
    HandleSpec,
    RunConfig,
    apply_overrides,
    load_run_config,
)
from polyharm.config.settings import Settings, create_default_config


class TestSettings:
    """Tests for Settings."""

    def test_defaults(self) -> None:
        settings = Settings()
        assert settings.series_tol == 1e-12
        assert settings.N == 40
        assert settings.J == 20
        assert settings.K_max == 12
        assert settings.threads == 1
        assert settings.log_level == "WARNING"

    def test_yaml_round_trip(self, temp_dir) -> None:
        path = temp_dir / "sub" / "config.yaml"
        Settings(N=24, quad_degree=16).save_to_yaml(path)
        loaded = Settings.load_from_yaml(path)
        assert loaded.N == 24
        assert loaded.quad_degree == 16

    def test_missing_file_gives_defaults(self, temp_dir) -> None:
        assert Settings.load_from_yaml(temp_dir / "absent.yaml").N == 40

    def test_env_override(self, monkeypatch) -> None:
        monkeypatch.setenv("POLYHARM_K_MAX", "5")
        assert Settings().K_max == 5

    def test_rejects_invalid_value(self) -> None:
        with pytest.raises(ValidationError):
            Settings(series_tol=0.0)

    def test_create_default_config(self, temp_dir, monkeypatch) -> None:
        target = temp_dir / ".polyharm" / "config.yaml"
        monkeypatch.setattr(settings_module, "DEFAULT_CONFIG_PATH", target)
        path = create_default_config()
        assert path == target
        data = yaml.safe_load(path.read_text())
        assert data["N"] == 40
        assert Settings(**data).contour_nodes == 512

        path.write_text("N: 7\n")
        create_default_config()
        assert path.read_text() == "N: 7\n"


def expand_doc() -> dict:
    return {
        "command": "expand",
        "expand": {
            "function": {"kind": "constant", "coef": 1.0},
            "exponents": {"kind": "arithmetic", "start": 1.0, "step": 1.0},
        },
    }


class TestRunConfig:
    """Tests for RunConfig validation."""

    def test_valid_expand(self) -> None:
        config = RunConfig.model_validate(expand_doc())
        assert config.block() is config.expand
        assert config.output.format == "csv"
        assert config.meta() == {"command": "expand"}

    def test_missing_block(self) -> None:
        with pytest.raises(ValidationError, match="needs a 'radius' block"):
            RunConfig.model_validate({"command": "radius"})

    def test_verify_block_is_optional(self) -> None:
        config = RunConfig.model_validate({"command": "verify"})
        assert config.verify.seed == 0
        assert config.verify.checks is None

    def test_model_required(self) -> None:
        doc = {"command": "jet", "jet": {"k": 0}}
        with pytest.raises(ValidationError, match="needs a 'model'"):
            RunConfig.model_validate(doc)

    def test_tolerance_ceiling(self) -> None:
        doc = expand_doc() | {"knobs": {"tol": 0.5}}
        with pytest.raises(ValidationError):
            RunConfig.model_validate(doc)

    def test_unknown_key(self) -> None:
        doc = expand_doc() | {"knobz": {}}
        with pytest.raises(ValidationError):
            RunConfig.model_validate(doc)

    def test_extend_base_length(self, harmonic_model_doc) -> None:
        doc = {
            "command": "extend",
            "model": harmonic_model_doc,
            "extend": {"base": [1.0, 0.0], "re": {"start": 0.0, "stop": 0.0}},
        }
        with pytest.raises(ValidationError, match="3 components"):
            RunConfig.model_validate(doc)

    def test_extend_axis(self, harmonic_model_doc) -> None:
        doc = {
            "command": "extend",
            "model": harmonic_model_doc,
            "extend": {"base": [1.0, 0.0, 0.0], "axis": 3, "re": {"start": 0.0, "stop": 0.0}},
        }
        with pytest.raises(ValidationError, match="axis"):
            RunConfig.model_validate(doc)

    def test_flc_radii_inside_annulus(self, harmonic_model_doc) -> None:
        doc = {
            "command": "flc",
            "model": harmonic_model_doc,
            "flc": {"k": 0, "r_min": 0.4, "r_max": 1.5},
        }
        with pytest.raises(ValidationError, match="inside the model annulus"):
            RunConfig.model_validate(doc)

    def test_flc_radii_ordered(self, harmonic_model_doc) -> None:
        doc = {
            "command": "flc",
            "model": harmonic_model_doc,
            "flc": {"k": 0, "r_min": 1.5, "r_max": 1.0},
        }
        with pytest.raises(ValidationError, match="r_max"):
            RunConfig.model_validate(doc)

    def test_load_with_overrides(self, temp_dir) -> None:
        path = temp_dir / "run.yaml"
        path.write_text(yaml.safe_dump(expand_doc()))
        config = load_run_config(path, {"knobs.N": 12, "output.format": "json", "threads": None})
        assert config.knobs.N == 12
        assert config.output.format == "json"
        assert config.threads == 1
        assert config.meta() == {"command": "expand", "N": 12}


class TestOverrides:
    """Tests for apply_overrides."""

    def test_nested_keys(self) -> None:
        data = {"knobs": {"J": 4}, "command": "extend"}
        merged = apply_overrides(data, {"knobs.N": 10, "output.path": "x.csv", "command": None})
        assert merged == {
            "knobs": {"J": 4, "N": 10},
            "command": "extend",
            "output": {"path": "x.csv"},
        }

    def test_does_not_mutate_input(self) -> None:
        data = {"knobs": {"J": 4}}
        apply_overrides(data, {"knobs.J": 8})
        assert data == {"knobs": {"J": 4}}


class TestParameterBlocks:
    """Tests for the conversion helpers on parameter blocks."""

    def test_exponent_kinds(self) -> None:
        explicit = ExponentSpec(kind="explicit", values=[1.0, [0.0, 2.0]]).to_sequence()
        assert explicit.prefix(1) == (1.0, 2j)
        assert ExponentSpec(kind="constant", value=0.5).to_sequence().prefix(2) == (0.5, 0.5, 0.5)
        arithmetic = ExponentSpec(kind="arithmetic", start=1.0, step=2.0).to_sequence()
        assert arithmetic.prefix(3) == (1.0, 3.0, 5.0, 7.0)

    def test_explicit_needs_values(self) -> None:
        with pytest.raises(ValidationError):
            ExponentSpec(kind="explicit")

    def test_polynomial_handle(self) -> None:
        handle = HandleSpec(kind="polynomial", coeffs=[1.0, 0.0, 2.0]).to_handle()
        assert_allclose(handle.derivatives(0.5, 2), [1.5, 2.0, 4.0])

    def test_polynomial_needs_coeffs(self) -> None:
        with pytest.raises(ValidationError):
            HandleSpec(kind="polynomial")

    def test_grid_values(self) -> None:
        assert_allclose(GridSpec(start=0.0, stop=1.0, count=5).values(), np.linspace(0, 1, 5))
        assert_allclose(GridSpec(start=0.3, stop=9.0).values(), [0.3])

    def test_extend_points(self) -> None:
        params = ExtendParams(
            base=[0.5, [0.0, 1.0], 0.0],
            axis=2,
            re={"start": 0.0, "stop": 1.0, "count": 2},
            im={"start": 0.0, "stop": 0.5, "count": 2},
        )
        points, offsets = params.points()
        assert points.shape == (4, 3)
        assert_allclose(offsets, [0.0, 1.0, 0.5j, 1.0 + 0.5j])
        assert_allclose(points[3], [0.5, 1j, 1.0 + 0.5j])


class TestImports:
    """Each subpackage imports on its own in a fresh interpreter."""

    @pytest.mark.parametrize(
        "module",
        [
            "polyharm.core",
            "polyharm.core.fundamental",
            "polyharm.models",
            "polyharm.config",
            "polyharm.config.run",
            "polyharm.spherical",
            "polyharm.extension",
            "polyharm.verify",
            "polyharm.cli",
        ],
    )
    def test_fresh_import(self, module: str) -> None:
        result = subprocess.run([sys.executable, "-c", f"import {module}"], capture_output=True, text=True)
        assert result.returncode == 0, result.stderr


class TestKnobs:
    """Tests for the numeric knobs block."""

    def test_quad_nodes_is_quad_degree(self) -> None:
        config = RunConfig.model_validate(expand_doc() | {"knobs": {"quad_nodes": 8}})
        assert config.knobs.quad_degree == 8
        assert config.meta() == {"command": "expand", "quad_degree": 8}

    def test_quad_degree_positive(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig.model_validate(expand_doc() | {"knobs": {"quad_degree": 0}})
