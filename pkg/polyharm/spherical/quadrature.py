"""Quadrature rules on the unit circle and the unit sphere."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from polyharm.core.errors import ConfigurationError


@dataclass(frozen=True)
class SphereQuadrature:
    """Nodes on S^{d-1} and weights integrating band limit ``degree`` products exactly.

    d = 2: 4 (degree + 1) equispaced angles.
    d = 3: degree + 1 Gauss-Legendre latitudes times 2 (degree + 1) + 1 longitudes.
    """

    d: int
    degree: int
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.weights.size

    def integrate(self, values: np.ndarray) -> complex:
        """Integral over the sphere of sampled values (last axis runs over nodes)."""
        return np.tensordot(values, self.weights, axes=([-1], [0]))


@lru_cache(maxsize=32)
def sphere_quadrature(d: int, degree: int) -> SphereQuadrature:
    """Cached quadrature for dimension d and band limit ``degree``."""
    if degree < 0:
        raise ConfigurationError(f"Quadrature degree {degree} is negative", operation="quadrature")
    if d == 2:
        count = 4 * (degree + 1)
        phi = 2 * math.pi * np.arange(count) / count
        nodes = np.stack([np.cos(phi), np.sin(phi)], axis=-1)
        weights = np.full(count, 2 * math.pi / count)
    elif d == 3:
        cos_theta, gl_weights = roots_legendre(degree + 1)
        n_phi = 2 * (degree + 1) + 1
        phi = 2 * math.pi * np.arange(n_phi) / n_phi
        sin_theta = np.sqrt(1 - cos_theta**2)
        nodes = np.stack(
            [
                np.outer(sin_theta, np.cos(phi)).ravel(),
                np.outer(sin_theta, np.sin(phi)).ravel(),
                np.repeat(cos_theta, n_phi),
            ],
            axis=-1,
        )
        weights = np.repeat(gl_weights, n_phi) * (2 * math.pi / n_phi)
    else:
        raise ConfigurationError(f"No sphere quadrature for d={d}", operation="quadrature")
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return SphereQuadrature(d=d, degree=degree, nodes=nodes, weights=weights)
