"""Real orthonormal spherical-harmonic bases for d = 2 and d = 3.

Each Y_{k,l} is stored as a homogeneous harmonic polynomial in Cartesian form,
so the same evaluator serves unit vectors, real points (giving r^k Y_{k,l}(theta))
and complex points of C^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from polyharm.core.errors import InvalidInputError

SUPPORTED_DIMENSIONS = (2, 3)


def surface_area(d: int) -> float:
    """omega_{d-1}, the area of the unit sphere in R^d."""
    return 2.0 * math.pi ** (d / 2) / math.gamma(d / 2)


def basis_count(d: int, k: int) -> int:
    """a_k, the dimension of degree-k spherical harmonics."""
    _check_dimension(d)
    if k < 0:
        raise InvalidInputError(f"Negative degree {k}", operation="basis_count")
    if k == 0:
        return 1
    return 2 if d == 2 else 2 * k + 1


def _check_dimension(d: int) -> None:
    if d not in SUPPORTED_DIMENSIONS:
        raise InvalidInputError(
            f"Spherical harmonics are available for d in {SUPPORTED_DIMENSIONS}, got {d}",
            operation="HarmonicBasis",
        )


@lru_cache(maxsize=None)
def _legendre_terms(k: int, m: int) -> tuple[tuple[int, float], ...]:
    """Terms (t, c) of the polynomial sum c * q^t * z^(k - 2t - m) for order m."""
    terms = []
    for t in range((k - m) // 2 + 1):
        c = (
            (-1) ** t
            * 2.0 ** (-k)
            * math.comb(k, t)
            * math.comb(2 * k - 2 * t, k)
            * math.factorial(k - 2 * t)
            / math.factorial(k - 2 * t - m)
        )
        terms.append((t, c))
    return tuple(terms)


def _order_of(l: int) -> tuple[int, str]:
    """Map the basis index l (1-based) of d = 3 to (m, 'cos' | 'sin')."""
    if l == 1:
        return 0, "cos"
    return l // 2, "cos" if l % 2 == 0 else "sin"


@dataclass(frozen=True)
class HarmonicBasis:
    """Orthonormal basis Y_{k,1}, ..., Y_{k,a_k} of degree-k harmonics in R^d."""

    d: int
    k: int

    def __post_init__(self) -> None:
        _check_dimension(self.d)
        if self.k < 0:
            raise InvalidInputError(f"Negative degree {self.k}", operation="HarmonicBasis")

    @property
    def a_k(self) -> int:
        return basis_count(self.d, self.k)

    @property
    def omega(self) -> float:
        return surface_area(self.d)

    def evaluate(self, l: int, points: np.ndarray) -> np.ndarray:
        """Y_{k,l} at points of shape (..., d); real input gives real output."""
        if not 1 <= l <= self.a_k:
            raise InvalidInputError(
                f"Basis index l={l} outside 1..{self.a_k} for k={self.k}",
                operation="HarmonicBasis.evaluate",
            )
        pts = np.asarray(points)
        is_real = not np.iscomplexobj(pts)
        pts = pts.astype(complex)
        if pts.shape[-1] != self.d:
            raise InvalidInputError(
                f"Points have dimension {pts.shape[-1]}, basis has d={self.d}",
                operation="HarmonicBasis.evaluate",
            )
        x, y = pts[..., 0], pts[..., 1]
        u, w = x + 1j * y, x - 1j * y

        if self.d == 2:
            if self.k == 0:
                values = np.full(x.shape, 1.0 / math.sqrt(2 * math.pi), dtype=complex)
            elif l == 1:
                values = (u**self.k + w**self.k) / (2 * math.sqrt(math.pi))
            else:
                values = (u**self.k - w**self.k) / (2j * math.sqrt(math.pi))
        else:
            z = pts[..., 2]
            q = x * x + y * y + z * z
            m, part = _order_of(l)
            radial = np.zeros(x.shape, dtype=complex)
            for t, c in _legendre_terms(self.k, m):
                radial = radial + c * q**t * z ** (self.k - 2 * t - m)
            if m == 0:
                angular = np.ones(x.shape, dtype=complex)
            elif part == "cos":
                angular = (u**m + w**m) / 2
            else:
                angular = (u**m - w**m) / 2j
            norm = math.sqrt((2 * self.k + 1) / (4 * math.pi))
            norm *= math.sqrt((2 - (m == 0)) * math.factorial(self.k - m) / math.factorial(self.k + m))
            values = norm * radial * angular

        return values.real if is_real else values

    def evaluate_all(self, points: np.ndarray) -> np.ndarray:
        """Stack of Y_{k,1}, ..., Y_{k,a_k} at the points, shape (a_k, ...)."""
        return np.stack([self.evaluate(l, points) for l in range(1, self.a_k + 1)])


@lru_cache(maxsize=None)
def harmonic_basis(d: int, k: int) -> HarmonicBasis:
    """Cached basis for (d, k)."""
    return HarmonicBasis(d=d, k=k)


def harmonic_indices(d: int, K_max: int) -> list[tuple[int, int]]:
    """All (k, l) with k <= K_max in k-then-l order."""
    return [(k, l) for k in range(K_max + 1) for l in range(1, basis_count(d, k) + 1)]
