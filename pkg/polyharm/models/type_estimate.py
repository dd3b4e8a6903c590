"""Empirical polyharmonic type: t_p = (max_K |Delta^p f| / (2p)!)^(1/2p)."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln

from polyharm.core.errors import InvalidInputError
from polyharm.models.base import AnnularModel

RADIAL_SAMPLES = 32
ANGULAR_SAMPLES = 64
POLAR_SAMPLES = 32


def sample_grid(d: int, a: float, b: float) -> np.ndarray:
    """Tensor grid of the closed shell a <= |x| <= b."""
    radii = np.linspace(a, b, RADIAL_SAMPLES)
    phi = 2 * math.pi * np.arange(ANGULAR_SAMPLES) / ANGULAR_SAMPLES
    if d == 2:
        dirs = np.stack([np.cos(phi), np.sin(phi)], axis=-1)
    else:
        theta = math.pi * (np.arange(POLAR_SAMPLES) + 0.5) / POLAR_SAMPLES
        dirs = np.stack(
            [
                np.outer(np.sin(theta), np.cos(phi)).ravel(),
                np.outer(np.sin(theta), np.sin(phi)).ravel(),
                np.repeat(np.cos(theta), ANGULAR_SAMPLES),
            ],
            axis=-1,
        )
    return (radii[:, None, None] * dirs[None, :, :]).reshape(-1, d)


def estimate_type(m: AnnularModel, a: float, b: float, p_max: int = 30) -> list[float]:
    """t_1, ..., t_{p_max} over the compact shell K = [a, b]."""
    if not m.r0 < a < b < m.r1:
        raise InvalidInputError(
            f"Shell [{a}, {b}] must lie inside ({m.r0}, {m.r1})",
            operation="estimate_type",
        )
    if p_max < 5:
        raise InvalidInputError("p_max must be at least 5", operation="estimate_type")

    grid = sample_grid(m.d, a, b)
    estimates = []
    for p in range(1, p_max + 1):
        peak = float(np.max(np.abs(m.laplacian_iterate(p, grid))))
        if peak == 0.0:
            estimates.append(0.0)
        else:
            estimates.append(float(np.exp((math.log(peak) - gammaln(2 * p + 1)) / (2 * p))))
    return estimates
