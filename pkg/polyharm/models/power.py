"""The family H_{alpha,k}(x) = |x|^(2 alpha) Y_{k,l}(x)."""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from polyharm.core.errors import InvalidInputError
from polyharm.core.handles import FunctionHandle, PowerSumHandle
from polyharm.models.base import AnnularModel, unit_vector
from polyharm.spherical.basis import basis_count, harmonic_basis


def power_coefficient(alpha: float, p: int, k: int, d: int) -> float:
    """c_{alpha,p} = prod_{j<p} (2 alpha - 2j)(2 alpha + d - 2 + 2k - 2j)."""
    c = 1.0
    for j in range(p):
        c *= (2 * alpha - 2 * j) * (2 * alpha + d - 2 + 2 * k - 2 * j)
    return c


def is_finite_order(alpha: float, k: int, d: int) -> bool:
    """Whether some c_{alpha,p} vanishes, i.e. H_{alpha,k} is polyharmonic of finite order."""
    shifted = alpha + d / 2 - 1 + k
    return any(v >= 0 and float(v).is_integer() for v in (alpha, shifted))


class PowerModel(AnnularModel):
    """Delta^p H_{alpha,k} = c_{alpha,p} |x|^(2 alpha - 2p) Y_{k,l}(x)."""

    family = "power"

    def __init__(self, d: int, r0: float, r1: float, alpha: float, k: int, l: int = 1) -> None:
        super().__init__(d, r0, r1)
        if not 1 <= l <= basis_count(d, k):
            raise InvalidInputError(f"Invalid harmonic index ({k}, {l})", operation="model")
        self.alpha = float(alpha)
        self.k = k
        self.l = l

    @property
    def tau_claimed(self) -> float:
        if is_finite_order(self.alpha, self.k, self.d):
            return 0.0
        return 1.0 / self.r0 if self.r0 > 0 else math.inf

    def coefficient(self, p: int) -> float:
        return power_coefficient(self.alpha, p, self.k, self.d)

    def _laplacian(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        solid = harmonic_basis(self.d, self.k).evaluate(self.l, pts)
        return self.coefficient(p) * r ** (2 * self.alpha - 2 * p) * solid

    def _radial(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        solid = harmonic_basis(self.d, self.k).evaluate(self.l, pts)
        mu = 2 * self.alpha - 2 * p + self.k
        return self.coefficient(p) * mu * r ** (2 * self.alpha - 2 * p - 1) * solid

    def exact_flc(self, k: int, l: int, r: float) -> complex:
        if (k, l) != (self.k, self.l):
            return 0j
        return complex(r ** (2 * self.alpha + self.k))

    def radial_section(self, theta: Any) -> FunctionHandle:
        direction = unit_vector(theta, self.d)[None, :]
        y = float(harmonic_basis(self.d, self.k).evaluate(self.l, direction)[0])
        return PowerSumHandle([(y, 2 * self.alpha + self.k)])

    def parameters(self) -> dict[str, Any]:
        return {"alpha": self.alpha, "k": self.k, "l": self.l}
