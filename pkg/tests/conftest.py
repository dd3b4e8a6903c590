"""Pytest configuration and fixtures."""

from __future__ import annotations

import tempfile
from pathlib import Path
from typing import Generator

import numpy as np
import pytest

from polyharm.models import ExponentialModel, HarmonicModel
from polyharm.verify.checks import harmonic_demo


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as d:
        yield Path(d)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so randomized corpora are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def harmonic3() -> HarmonicModel:
    """Harmonic model on A(0.5, 2) in R^3."""
    return harmonic_demo(3)


@pytest.fixture
def harmonic2() -> HarmonicModel:
    """Harmonic model on A(0.5, 2) in R^2, with a log term."""
    return harmonic_demo(2)


@pytest.fixture
def exponential3() -> ExponentialModel:
    """Plane exponential on A(0.5, 1.5) in R^3."""
    return ExponentialModel(3, 0.5, 1.5, [0.2, -0.3, 0.4])


@pytest.fixture
def harmonic_model_doc() -> dict:
    """Model file document of the d = 3 harmonic model."""
    return {
        "family": "harmonic",
        "d": 3,
        "r0": 0.5,
        "r1": 2.0,
        "parameters": {
            "terms": [
                {"k": 0, "l": 1, "alpha": 1.0, "beta": 0.5},
                {"k": 1, "l": 1, "alpha": 2.0, "beta": 0.5},
                {"k": 2, "l": 3, "alpha": -0.75, "beta": 0.25},
                {"k": 3, "l": 6, "alpha": 0.4, "beta": -0.1},
            ],
        },
    }
