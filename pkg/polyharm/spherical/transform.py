"""Fourier-Laplace coefficients f_{k,l}(r) by sphere quadrature."""

from __future__ import annotations

import math
from collections.abc import Callable
from functools import lru_cache

import numpy as np

from polyharm.config.settings import get_settings
from polyharm.core.errors import InvalidInputError
from polyharm.spherical.basis import harmonic_basis, harmonic_indices
from polyharm.spherical.quadrature import SphereQuadrature, sphere_quadrature

PointFunction = Callable[[np.ndarray], np.ndarray]


def _quadrature(d: int, degree: int | None) -> SphereQuadrature:
    return sphere_quadrature(d, get_settings().quad_degree if degree is None else degree)


def _check_radius(r: float, r0: float, r1: float, operation: str) -> None:
    if not r0 < r < r1:
        raise InvalidInputError(
            f"Radius {r} is outside the annulus ({r0}, {r1})",
            operation=operation,
        )


@lru_cache(maxsize=16)
def projection_matrix(d: int, degree: int, K_max: int) -> tuple[tuple[tuple[int, int], ...], np.ndarray]:
    """Rows Y_{k,l}(node) * weight for all (k, l) with k <= K_max."""
    quad = sphere_quadrature(d, degree)
    indices = tuple(harmonic_indices(d, K_max))
    rows = np.stack([harmonic_basis(d, k).evaluate(l, quad.nodes) for k, l in indices])
    matrix = rows * quad.weights[None, :]
    matrix.setflags(write=False)
    return indices, matrix


def flc(
    f: PointFunction,
    k: int,
    l: int,
    r: float,
    *,
    d: int,
    r0: float = 0.0,
    r1: float = math.inf,
    degree: int | None = None,
) -> complex:
    """f_{k,l}(r) = integral over S^{d-1} of f(r theta) Y_{k,l}(theta) dtheta."""
    _check_radius(r, r0, r1, "flc")
    quad = _quadrature(d, degree)
    values = np.asarray(f(r * quad.nodes), dtype=complex)
    basis = harmonic_basis(d, k).evaluate(l, quad.nodes)
    return complex(quad.integrate(values * basis))


def flc_all(
    f: PointFunction,
    r: float,
    K_max: int,
    *,
    d: int,
    r0: float = 0.0,
    r1: float = math.inf,
    degree: int | None = None,
) -> dict[tuple[int, int], complex]:
    """All f_{k,l}(r) with k <= K_max from one set of samples."""
    _check_radius(r, r0, r1, "flc_all")
    quad = _quadrature(d, degree)
    values = np.asarray(f(r * quad.nodes), dtype=complex)
    return project(values, d, quad.degree, K_max)


def project(values: np.ndarray, d: int, degree: int, K_max: int) -> dict[tuple[int, int], complex]:
    """Project samples on the quadrature nodes onto every Y_{k,l}, k <= K_max."""
    indices, matrix = projection_matrix(d, degree, K_max)
    coeffs = matrix @ values
    return {index: complex(c) for index, c in zip(indices, coeffs)}


def parseval_check(
    f: PointFunction,
    r: float,
    K_max: int,
    *,
    d: int,
    degree: int | None = None,
) -> tuple[float, float]:
    """(integral of |f(r theta)|^2, sum over k <= K_max of |f_{k,l}(r)|^2)."""
    if degree is None:
        degree = max(get_settings().quad_degree, 2 * K_max + 8)
    quad = sphere_quadrature(d, degree)
    values = np.asarray(f(r * quad.nodes), dtype=complex)
    lhs = float(quad.integrate(np.abs(values) ** 2).real)
    coeffs = project(values, d, degree, K_max)
    rhs = float(sum(abs(c) ** 2 for c in coeffs.values()))
    return lhs, rhs
