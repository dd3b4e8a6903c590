"""Tests for the polyharm command line."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest
import yaml
from click.testing import CliRunner
from numpy.testing import assert_allclose

from polyharm.cli import main


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def model_file(temp_dir, harmonic_model_doc) -> Path:
    path = temp_dir / "model.yaml"
    path.write_text(yaml.safe_dump(harmonic_model_doc))
    return path


def write_config(temp_dir: Path, doc: dict, name: str = "run.yaml") -> Path:
    path = temp_dir / name
    path.write_text(yaml.safe_dump(doc))
    return path


EXPAND = {
    "expand": {
        "function": {"kind": "constant", "coef": 1.0},
        "exponents": {"kind": "arithmetic", "start": 1.0, "step": 1.0},
        "points": [0.5],
    }
}


def as_complex(pair: list) -> complex:
    return complex(float(pair[0]), float(pair[1]))


class TestCommands:
    """Successful runs of each subcommand."""

    def test_help(self, runner) -> None:
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        for command in ("fundamental", "expand", "radius", "flc", "jet", "extend", "verify"):
            assert command in result.output

    def test_expand(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, EXPAND)
        out = temp_dir / "expand.json"
        args = ["expand", "--config", str(config), "--format", "json", "--out", str(out), "--N", "40"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0, result.output

        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["meta"]["command"] == "expand"
        assert document["meta"]["radius"] == pytest.approx(math.log(2.0), rel=0.02)
        coeffs = [r for r in document["rows"] if r["kind"] == "coeff"]
        assert len(coeffs) == 41
        assert as_complex(coeffs[3]["value"]) == pytest.approx(-6.0)
        partial = next(r for r in document["rows"] if r["kind"] == "partial_sum")
        assert as_complex(partial["value"]) == pytest.approx(1.0, abs=1e-6)

    def test_repeat_runs_are_identical(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, EXPAND)
        outputs = []
        for name in ("first.csv", "second.csv"):
            out = temp_dir / name
            result = runner.invoke(main, ["expand", "--config", str(config), "--out", str(out)])
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        assert outputs[0].startswith(b"command,")

    def test_radius(self, runner, temp_dir) -> None:
        coeffs = [float(math.factorial(n)) * 0.5**n for n in range(30)]
        config = write_config(temp_dir, {"radius": {"coeffs": coeffs}})
        out = temp_dir / "radius.json"
        result = runner.invoke(
            main, ["radius", "--config", str(config), "--format", "json", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        row = json.loads(out.read_text())["rows"][0]
        assert row["count"] == 30
        assert row["radius"] == pytest.approx(2.0, rel=1e-9)

    def test_fundamental(self, runner, temp_dir) -> None:
        doc = {
            "fundamental": {
                "exponents": [1.0, 2.0],
                "re": {"start": 0.0, "stop": 1.0, "count": 3},
                "im": {"start": 0.0, "stop": 0.5, "count": 2},
            }
        }
        config = write_config(temp_dir, doc)
        out = temp_dir / "phi.json"
        result = runner.invoke(
            main, ["fundamental", "--config", str(config), "--format", "json", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        document = json.loads(out.read_text())
        assert document["meta"]["n"] == 1
        assert len(document["rows"]) == 6
        for row in document["rows"]:
            assert row["closed-form"] is not None
            assert row["max_deviation"] <= 1e-9
        z = as_complex(document["rows"][1]["z"])
        assert_allclose(as_complex(document["rows"][1]["series"]), np.exp(2 * z) - np.exp(z))

    def test_flc_with_model_file(self, runner, temp_dir, model_file) -> None:
        config = write_config(temp_dir, {"flc": {"k": 0, "r_min": 0.8, "r_max": 1.2, "count": 3}})
        out = temp_dir / "flc.json"
        args = ["flc", "--config", str(config), "--model", str(model_file), "--format", "json"]
        result = runner.invoke(main, [*args, "--out", str(out)])
        assert result.exit_code == 0, result.output
        rows = json.loads(out.read_text())["rows"]
        assert [r["r"] for r in rows] == pytest.approx([0.8, 1.0, 1.2])
        for row in rows:
            expected = 1.0 + 0.5 / row["r"]
            assert abs(as_complex(row["value"]) - expected) < 1e-10
            assert abs(as_complex(row["exact"]) - expected) < 1e-12

    def test_jet(self, runner, temp_dir, model_file) -> None:
        config = write_config(temp_dir, {"jet": {"k": 1, "l": 1, "v0": 0.0}})
        out = temp_dir / "jet.json"
        args = ["jet", "--config", str(config), "--model", str(model_file), "--N", "10"]
        result = runner.invoke(main, [*args, "--format", "json", "--out", str(out)])
        assert result.exit_code == 0, result.output
        document = json.loads(out.read_text())
        derivs = [as_complex(r["deriv"]) for r in document["rows"]]
        assert len(derivs) == 11
        assert_allclose(derivs[:2], [2.5, -1.5], rtol=1e-10)
        assert_allclose(derivs[2:], 0.0, atol=1e-10)
        assert document["meta"]["guaranteed_radius"] == "inf"

    def test_extend_slice(self, runner, temp_dir, model_file, harmonic3) -> None:
        doc = {
            "extend": {
                "base": [0.6, 0.5, -0.4],
                "axis": 0,
                "re": {"start": 0.0, "stop": 0.2, "count": 3},
                "im": {"start": 0.0, "stop": 2.0, "count": 2},
                "series_out": str(temp_dir / "series.json"),
            }
        }
        config = write_config(temp_dir, doc)
        out = temp_dir / "slice.json"
        args = ["extend", "--config", str(config), "--model", str(model_file)]
        knobs = ["--K-max", "4", "--J", "12", "--N", "24", "--format", "json", "--out", str(out)]
        result = runner.invoke(main, [*args, *knobs])
        assert result.exit_code == 0, result.output

        rows = json.loads(out.read_text())["rows"]
        assert len(rows) == 6
        for row in rows[:3]:
            assert row["inside"]
            point = np.array([0.6 + row["x"], 0.5, -0.4])
            assert abs(as_complex(row["value"]) - harmonic3(point)) < 1e-6
        for row in rows[3:]:
            assert not row["inside"]
            assert row["value"] == ["nan", "nan"]
        assert (temp_dir / "series.json").exists()

    def test_verify(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, {"verify": {"seed": 1, "checks": ["cauchy_data"]}})
        out = temp_dir / "report.json"
        result = runner.invoke(main, ["verify", "--config", str(config), "--out", str(out)])
        assert result.exit_code == 0, result.output
        entries = json.loads(out.read_text())
        assert entries
        assert all(e["check"] == "cauchy_data" and e["passed"] for e in entries)

    def test_verify_default_set_is_reproducible(self, runner, temp_dir) -> None:
        """Every check, seed 0, twice: all witnesses pass and the reports match byte for byte."""
        config = write_config(temp_dir, {"verify": {"seed": 0}})
        outputs = []
        for name in ("first.json", "second.json"):
            out = temp_dir / name
            result = runner.invoke(main, ["verify", "--config", str(config), "--out", str(out)])
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

        entries = json.loads(outputs[0])
        assert entries
        assert all(e["passed"] for e in entries)
        assert {e["check"] for e in entries} >= {"type_trend", "appendix_witnesses"}

    def test_quad_nodes_alias(self, runner, temp_dir, model_file) -> None:
        config = write_config(temp_dir, {"flc": {"k": 0, "r_min": 1.0, "r_max": 1.0, "count": 1}})
        out = temp_dir / "flc.json"
        args = ["flc", "--config", str(config), "--model", str(model_file), "--format", "json"]
        result = runner.invoke(main, [*args, "--quad-nodes", "12", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert json.loads(out.read_text())["meta"]["quad_degree"] == 12


class TestFailures:
    """Exit codes and error documents."""

    def test_tolerance_above_ceiling(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, EXPAND)
        result = runner.invoke(main, ["expand", "--config", str(config), "--tol", "0.5"])
        assert result.exit_code == 2
        errors = json.loads(result.stdout)
        assert errors[0]["loc"] == ["knobs", "tol"]

    def test_missing_block(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, {"threads": 2})
        result = runner.invoke(main, ["radius", "--config", str(config)])
        assert result.exit_code == 2
        assert "needs a 'radius' block" in json.loads(result.stdout)[0]["msg"]

    def test_contour_radius_too_small(self, runner, temp_dir) -> None:
        doc = {
            "fundamental": {
                "exponents": [1.0, 2.0],
                "re": {"start": 0.0, "stop": 1.0, "count": 2},
                "contour_radius": 0.5,
            }
        }
        config = write_config(temp_dir, doc)
        result = runner.invoke(main, ["fundamental", "--config", str(config)])
        assert result.exit_code == 2
        errors = json.loads(result.stdout)
        assert errors[0]["loc"] == ["eval_fundamental"]
        assert errors[0]["type"] == "configuration"

    def test_unknown_check(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, {"verify": {"checks": ["no_such_check"]}})
        result = runner.invoke(main, ["verify", "--config", str(config)])
        assert result.exit_code == 2
        assert "no_such_check" in json.loads(result.stdout)[0]["msg"]

    def test_jet_outside_annulus(self, runner, temp_dir, model_file) -> None:
        config = write_config(temp_dir, {"jet": {"k": 0, "v0": 1.5}})
        args = ["jet", "--config", str(config), "--model", str(model_file), "--N", "6"]
        result = runner.invoke(main, args)
        assert result.exit_code == 1
        payload = json.loads(result.stdout)
        assert payload["error"] == "InvalidInputError"
        assert payload["operation"] == "log_jet"

    def test_too_few_radius_coefficients(self, runner, temp_dir) -> None:
        config = write_config(temp_dir, {"radius": {"coeffs": [1.0, 2.0, 3.0]}})
        result = runner.invoke(main, ["radius", "--config", str(config)])
        assert result.exit_code == 1
        assert json.loads(result.stdout)["operation"] == "convergence_radius"

    def test_missing_config_file(self, runner, temp_dir) -> None:
        result = runner.invoke(main, ["expand", "--config", str(temp_dir / "absent.yaml")])
        assert result.exit_code == 2

    def test_index_beyond_basis(self, runner, temp_dir, harmonic_model_doc) -> None:
        """l = 5 exceeds a_1 = 3 in d = 3."""
        doc = harmonic_model_doc | {"parameters": {"terms": [{"k": 1, "l": 5, "alpha": 1.0}]}}
        model = temp_dir / "bad-model.yaml"
        model.write_text(yaml.safe_dump(doc))
        config = write_config(temp_dir, {"jet": {"k": 1, "l": 5, "v0": 0.0}})
        result = runner.invoke(main, ["jet", "--config", str(config), "--model", str(model)])
        assert result.exit_code == 2
        errors = json.loads(result.stdout)
        assert any("exceeds a_k = 3" in e["msg"] for e in errors)

    def test_unexpected_exception(self, runner, temp_dir, monkeypatch) -> None:
        def explode(config):
            raise RuntimeError("boom")

        monkeypatch.setattr("polyharm.cli.radius_rows", explode)
        config = write_config(temp_dir, {"radius": {"coeffs": [1.0] * 12}})
        result = runner.invoke(main, ["radius", "--config", str(config)])
        assert result.exit_code == 1
        payload = json.loads(result.stdout)
        assert payload["error"] == "RuntimeError"
        assert payload["operation"] == "radius"
        assert payload["message"] == "boom"

    def test_failed_run_leaves_no_artifact(self, runner, temp_dir, model_file) -> None:
        config = write_config(temp_dir, {"jet": {"k": 0, "v0": 1.5}})
        out = temp_dir / "out" / "jet.csv"
        args = ["jet", "--config", str(config), "--model", str(model_file), "--N", "6"]
        result = runner.invoke(main, [*args, "--out", str(out)])
        assert result.exit_code == 1
        assert not out.exists()
        assert list(out.parent.iterdir()) == []
