"""Plane exponentials e^(a.x) with Delta^p f = |a|^(2p) f."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

import numpy as np

from polyharm.core.errors import InvalidInputError
from polyharm.core.handles import ExpPolyHandle, FunctionHandle
from polyharm.models.base import AnnularModel, unit_vector


class ExponentialModel(AnnularModel):
    family = "exponential"

    def __init__(self, d: int, r0: float, r1: float, a: Sequence[float]) -> None:
        super().__init__(d, r0, r1)
        self.a = np.asarray(a, dtype=float)
        if self.a.shape != (d,):
            raise InvalidInputError(f"Exponent vector must have {d} components", operation="model")
        self.a.setflags(write=False)

    @property
    def tau_claimed(self) -> float:
        return 0.0

    @property
    def a_norm_sq(self) -> float:
        return float(self.a @ self.a)

    def _laplacian(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        return self.a_norm_sq**p * np.exp(pts @ self.a)

    def _radial(self, p: int, pts: np.ndarray, r: np.ndarray) -> np.ndarray:
        return self.a_norm_sq**p * (pts @ self.a) / r * np.exp(pts @ self.a)

    def radial_section(self, theta: Any) -> FunctionHandle:
        rate = float(unit_vector(theta, self.d) @ self.a)
        return ExpPolyHandle.exponential(rate)

    def parameters(self) -> dict[str, Any]:
        return {"a": [float(v) for v in self.a]}
