"""Harmonic functions on annuli: sums of (alpha r^k + beta r^(2-d-k)) Y_{k,l}(theta)."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from polyharm.core.errors import InvalidInputError
from polyharm.core.handles import FunctionHandle, PowerSumHandle
from polyharm.models.base import AnnularModel, unit_vector
from polyharm.spherical.basis import basis_count, harmonic_basis


@dataclass(frozen=True)
class HarmonicTerm:
    """alpha r^k Y_{k,l}(theta) + beta r^(2-d-k) Y_{k,l}(theta)."""

    k: int
    l: int
    alpha: float = 0.0
    beta: float = 0.0


class HarmonicModel(AnnularModel):
    """Finite harmonic expansion, with f_{0,1}(r) = alpha_0 + log_beta * log r when d = 2."""

    family = "harmonic"

    def __init__(
        self,
        d: int,
        r0: float,
        r1: float,
        terms: Sequence[HarmonicTerm],
        log_beta: float = 0.0,
    ) -> None:
        super().__init__(d, r0, r1)
        for term in terms:
            if not 1 <= term.l <= basis_count(d, term.k):
                raise InvalidInputError(f"Invalid harmonic index ({term.k}, {term.l})", operation="model")
            if d == 2 and term.k == 0 and term.beta != 0:
                raise InvalidInputError(
                    "For d=2, k=0 the second solution is log r; set log_beta instead of beta",
                    operation="model",
                )
        if log_beta != 0 and d != 2:
            raise InvalidInputError("log_beta is only defined for d=2", operation="model")
        self.terms = tuple(terms)
        self.log_beta = float(log_beta)

    @property
    def tau_claimed(self) -> float:
        return 0.0

    def _second_exponent(self, k: int) -> int:
        return 2 - self.d - k

    def _y00(self) -> float:
        return harmonic_basis(self.d, 0).evaluate(1, np.zeros((1, self.d)))[0]

    def _laplacian(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        values = np.zeros(r.shape, dtype=complex)
        if p > 0:
            return values
        for t in self.terms:
            solid = harmonic_basis(self.d, t.k).evaluate(t.l, pts)
            values += solid * (t.alpha + t.beta * r ** (2 - self.d - 2 * t.k))
        if self.log_beta:
            values += self.log_beta * np.log(r) * self._y00()
        return values

    def _radial(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        values = np.zeros(r.shape, dtype=complex)
        if p > 0:
            return values
        for t in self.terms:
            angular = harmonic_basis(self.d, t.k).evaluate(t.l, pts) / r**t.k
            s = self._second_exponent(t.k)
            values += angular * (t.alpha * t.k * r ** (t.k - 1) + t.beta * s * r ** (s - 1))
        if self.log_beta:
            values += self.log_beta / r * self._y00()
        return values

    def exact_flc(self, k: int, l: int, r: float) -> complex:
        total = 0j
        for t in self.terms:
            if (t.k, t.l) == (k, l):
                total += t.alpha * r**k + t.beta * r ** self._second_exponent(k)
        if self.log_beta and (k, l) == (0, 1):
            total += self.log_beta * math.log(r)
        return total

    def radial_section(self, theta: Any) -> FunctionHandle:
        direction = unit_vector(theta, self.d)[None, :]
        powers = []
        for t in self.terms:
            y = float(harmonic_basis(self.d, t.k).evaluate(t.l, direction)[0])
            powers.append((t.alpha * y, float(t.k)))
            powers.append((t.beta * y, float(self._second_exponent(t.k))))
        return PowerSumHandle(powers, log_coef=self.log_beta * self._y00())

    def parameters(self) -> dict[str, Any]:
        return {"terms": [asdict(t) for t in self.terms], "log_beta": self.log_beta}
