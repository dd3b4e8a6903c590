"""Tests for CSV and JSON artifacts."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from polyharm.output import (
    check_writable,
    flatten_row,
    format_value,
    render_csv,
    render_json,
    write_artifact,
)


class TestFormatting:
    """Tests for scalar formatting."""

    def test_non_finite(self) -> None:
        assert format_value(math.nan) == "nan"
        assert format_value(math.inf) == "inf"
        assert format_value(-math.inf) == "-inf"

    def test_numpy_scalars(self) -> None:
        assert format_value(np.float64(0.25)) == 0.25
        assert format_value(np.int64(3)) == 3
        assert format_value(np.bool_(True)) is True

    def test_flatten_complex(self) -> None:
        row = flatten_row({"z": 1 - 2j, "n": 4, "w": np.complex128(math.inf)})
        assert row == {"z_re": 1.0, "z_im": -2.0, "n": 4, "w_re": "inf", "w_im": 0.0}


class TestRenderCsv:
    """Tests for render_csv."""

    def test_header_and_cells(self) -> None:
        rows = [{"x": 0.5, "value": 1 + 1j, "inside": True}, {"x": 1.0, "extra": None}]
        text = render_csv(rows, meta={"command": "extend", "K_max": 4})
        lines = text.splitlines()
        assert lines[0] == "command,K_max,x,value_re,value_im,inside,extra"
        assert lines[1] == "extend,4,0.5,1.0,1.0,true,"
        assert lines[2] == "extend,4,1.0,,,,"
        assert text.endswith("\n")

    def test_nan_cell(self) -> None:
        text = render_csv([{"value": math.nan}])
        assert text == "value\nnan\n"

    def test_repr_precision(self) -> None:
        text = render_csv([{"x": 0.1 + 0.2}])
        assert text.splitlines()[1] == repr(0.1 + 0.2)


class TestRenderJson:
    """Tests for render_json."""

    def test_document(self) -> None:
        text = render_json([{"z": 2j, "r": math.inf}], meta={"tau": 0.0})
        document = json.loads(text)
        assert document == {"meta": {"tau": 0.0}, "rows": [{"z": [0.0, 2.0], "r": "inf"}]}

    def test_nested_values(self) -> None:
        document = json.loads(render_json({"coeffs": (1 + 0j, np.float64(math.nan))}))
        assert document["rows"] == {"coeffs": [[1.0, 0.0], "nan"]}


class TestWriteArtifact:
    """Tests for writing artifacts to disk."""

    def test_creates_parents(self, temp_dir) -> None:
        path = temp_dir / "a" / "b" / "rows.json"
        write_artifact([{"n": 1}], path=path, fmt="json")
        assert json.loads(path.read_text(encoding="utf-8"))["rows"] == [{"n": 1}]

    def test_stdout(self, capsys) -> None:
        write_artifact([{"n": 1}], path=None, fmt="csv")
        assert capsys.readouterr().out == "n\n1\n"

    def test_check_writable(self, temp_dir) -> None:
        path = temp_dir / "new" / "out.csv"
        check_writable(path)
        assert path.parent.is_dir()
        assert not path.exists()
        assert list(path.parent.iterdir()) == []
        check_writable(None)

    def test_existing_file_untouched(self, temp_dir) -> None:
        path = temp_dir / "out.csv"
        path.write_text("n\n1\n")
        check_writable(path)
        assert path.read_text() == "n\n1\n"

    def test_directory_rejected(self, temp_dir) -> None:
        with pytest.raises(IsADirectoryError):
            check_writable(temp_dir)
