"""Laplace eigenfunctions grown from a harmonic seed.

f(x) = coef * sum_m s_m |x|^(2m) Y_{k,l}(x) with s_0 = 1 and
s_{m+1} = lam * s_m / (2(m+1)(2(m+1) + d - 2 + 2k)), so that Delta f = lam f.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from polyharm.core.errors import InvalidInputError
from polyharm.core.handles import FunctionHandle, PowerSumHandle
from polyharm.models.base import AnnularModel, unit_vector
from polyharm.spherical.basis import basis_count, harmonic_basis

MAX_SERIES_TERMS = 400


class EigenModel(AnnularModel):
    family = "eigen"

    def __init__(
        self,
        d: int,
        r0: float,
        r1: float,
        lam: complex,
        k: int = 0,
        l: int = 1,
        coef: complex = 1.0,
    ) -> None:
        super().__init__(d, r0, r1)
        if not math.isfinite(r1):
            raise InvalidInputError("Eigen models need a finite outer radius", operation="model")
        if not 1 <= l <= basis_count(d, k):
            raise InvalidInputError(f"Invalid harmonic index ({k}, {l})", operation="model")
        self.lam = complex(lam)
        self.k = k
        self.l = l
        self.coef = complex(coef)
        self.series = self._series_coefficients()

    def _series_coefficients(self) -> np.ndarray:
        coeffs = [complex(1.0)]
        scale = self.r1**2
        for m in range(MAX_SERIES_TERMS):
            nxt = coeffs[-1] * self.lam / (2 * (m + 1) * (2 * (m + 1) + self.d - 2 + 2 * self.k))
            coeffs.append(nxt)
            if abs(nxt) * scale ** (m + 1) < 1e-18:
                break
        return np.asarray(coeffs)

    @property
    def tau_claimed(self) -> float:
        return 0.0

    def _radial_profile(self, r: np.ndarray) -> np.ndarray:
        powers = r[None, :] ** (2 * np.arange(self.series.size))[:, None]
        return self.series @ powers

    def _laplacian(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        solid = harmonic_basis(self.d, self.k).evaluate(self.l, pts)
        return self.lam**p * self.coef * self._radial_profile(r) * solid

    def _radial(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        angular = harmonic_basis(self.d, self.k).evaluate(self.l, pts) / r**self.k
        mu = 2 * np.arange(self.series.size) + self.k
        derivative = (self.series * mu) @ (r[None, :] ** (mu - 1.0)[:, None])
        return self.lam**p * self.coef * derivative * angular

    def exact_flc(self, k: int, l: int, r: float) -> complex:
        if (k, l) != (self.k, self.l):
            return 0j
        return complex(self.coef * r**self.k * self._radial_profile(np.array([r]))[0])

    def radial_section(self, theta: Any) -> FunctionHandle:
        direction = unit_vector(theta, self.d)[None, :]
        y = float(harmonic_basis(self.d, self.k).evaluate(self.l, direction)[0])
        terms = [(self.coef * s * y, 2.0 * m + self.k) for m, s in enumerate(self.series)]
        return PowerSumHandle(terms)

    def parameters(self) -> dict[str, Any]:
        lam = self.lam.real if self.lam.imag == 0 else [self.lam.real, self.lam.imag]
        coef = self.coef.real if self.coef.imag == 0 else [self.coef.real, self.coef.imag]
        return {"lam": lam, "k": self.k, "l": self.l, "coef": coef}
