"""Base class for function families on annuli A(r0, r1)."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import Any

import numpy as np

from polyharm.core.errors import CapabilityError, DomainError, InvalidInputError
from polyharm.core.handles import FunctionHandle
from polyharm.spherical.basis import SUPPORTED_DIMENSIONS

DOMAIN_SLACK = 1e-12


def as_points(x: Any, d: int) -> tuple[np.ndarray, bool]:
    """Return points of shape (M, d) and whether the input was a single point."""
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if pts.shape[-1] != d:
        raise InvalidInputError(f"Expected points in R^{d}, got shape {pts.shape}", operation="model")
    return pts, single


class AnnularModel(ABC):
    """A function on A(r0, r1) in R^d with closed-form Laplacian iterates.

    Subclasses implement ``_laplacian`` and ``_radial`` on validated point arrays.
    """

    family: str = "base"

    def __init__(self, d: int, r0: float, r1: float) -> None:
        if d not in SUPPORTED_DIMENSIONS:
            raise InvalidInputError(f"Models are defined for d in {SUPPORTED_DIMENSIONS}", operation="model")
        if not 0 <= r0 < r1:
            raise InvalidInputError(f"Need 0 <= r0 < r1, got ({r0}, {r1})", operation="model")
        self.d = d
        self.r0 = float(r0)
        self.r1 = float(r1)

    @property
    @abstractmethod
    def tau_claimed(self) -> float:
        """Certified bound on the polyharmonic type."""
        ...

    @abstractmethod
    def _laplacian(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def _radial(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def parameters(self) -> dict[str, Any]:
        """Family parameters as stored in a model file."""
        ...

    def _validated(self, x: Any, p: int, operation: str) -> tuple[np.ndarray, np.ndarray, bool]:
        if p < 0:
            raise InvalidInputError("Order p must be nonnegative", operation=operation)
        pts, single = as_points(x, self.d)
        r = np.linalg.norm(pts, axis=-1)
        lo, hi = self.r0 * (1 - DOMAIN_SLACK), self.r1 * (1 + DOMAIN_SLACK)
        outside = (r <= lo) | (r >= hi)
        if np.any(outside):
            bad = float(r[outside][0])
            raise DomainError(
                f"|x| = {bad} is outside the annulus ({self.r0}, {self.r1})",
                constraint="annulus",
                operation=operation,
            )
        return pts, r, single

    def laplacian_iterate(self, p: int, x: Any) -> np.ndarray | complex:
        """Delta^p f(x); p = 0 returns f(x)."""
        pts, r, single = self._validated(x, p, "laplacian_iterate")
        values = np.asarray(self._laplacian(p, pts, r), dtype=complex)
        return complex(values[0]) if single else values

    def radial_derivative(self, p: int, x: Any) -> np.ndarray | complex:
        """d/dr of Delta^p f at x = r theta."""
        pts, r, single = self._validated(x, p, "radial_derivative")
        values = np.asarray(self._radial(p, pts, r), dtype=complex)
        return complex(values[0]) if single else values

    def __call__(self, x: Any) -> np.ndarray | complex:
        return self.laplacian_iterate(0, x)

    def exact_flc(self, k: int, l: int, r: float) -> complex:
        """f_{k,l}(r) in closed form, for families that know it."""
        raise CapabilityError(f"{self.family} models have no closed-form coefficients", operation="exact_flc")

    def radial_section(self, theta: Any) -> FunctionHandle:
        """r -> f(r theta) as a handle with exact r-derivatives."""
        raise CapabilityError(f"{self.family} models have no radial sections", operation="radial_section")

    def to_dict(self) -> dict[str, Any]:
        """Model file document."""
        return {
            "family": self.family,
            "d": self.d,
            "r0": self.r0,
            "r1": self.r1 if math.isfinite(self.r1) else "inf",
            "parameters": self.parameters(),
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}(d={self.d}, r0={self.r0}, r1={self.r1}, {self.parameters()})"


def unit_vector(theta: Any, d: int) -> np.ndarray:
    """Normalize a direction in R^d."""
    vec = np.asarray(theta, dtype=float).ravel()
    if vec.size != d:
        raise InvalidInputError(f"Direction must have {d} components", operation="radial_section")
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise InvalidInputError("Direction must be nonzero", operation="radial_section")
    return vec / norm
