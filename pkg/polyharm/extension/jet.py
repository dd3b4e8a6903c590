"""Generalized derivatives of Fourier-Laplace coefficients in the log variable v = log r.

With f~_{k,l}(v) = f_{k,l}(e^v) and the exponents of ``exponent_sequence_for(k, d)``,
D^(2p) f~(v) = e^(2pv) (L_k^p f_{k,l})(e^v), and L_k^p f_{k,l} is the (k,l) coefficient of
Delta^p f. Odd orders apply one more factor (d/dv - lambda_2p), using the model's
radial derivative for the exact v-derivative.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from polyharm.config.settings import get_settings
from polyharm.core.errors import InvalidInputError
from polyharm.core.exponents import ExponentSequence
from polyharm.core.fundamental import fundamental_table
from polyharm.models.base import AnnularModel
from polyharm.spherical.quadrature import sphere_quadrature
from polyharm.spherical.radial import exponent_sequence_for
from polyharm.spherical.transform import project

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogCoefficientJet:
    """D^(n) f~_{k,l}(v0) for n = 0..N."""

    k: int
    l: int
    v0: float
    derivs: tuple[complex, ...]
    exponents: ExponentSequence
    d: int
    tau: float = 0.0

    @property
    def N(self) -> int:
        return len(self.derivs) - 1

    def guaranteed_radius(self) -> float:
        """Radius of the disc around v0 where the log series is known to converge."""
        if self.tau <= 0:
            return math.inf
        return math.log1p(1.0 / (math.exp(self.v0) * self.tau))

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "k": self.k,
            "l": self.l,
            "d": self.d,
            "v0": self.v0,
            "tau": self.tau,
            "derivs": [[c.real, c.imag] for c in self.derivs],
            "exponents": [[lam.real, lam.imag] for lam in self.exponents.prefix(self.N)],
        }


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series value with its last-term tail estimate."""

    value: complex
    tail: float
    outside_disc: bool = False


def _check_v0(m: AnnularModel, v0: float, operation: str) -> float:
    r = math.exp(v0)
    if not m.r0 < r < m.r1:
        raise InvalidInputError(
            f"e^v0 = {r} is outside the annulus ({m.r0}, {m.r1})",
            operation=operation,
        )
    return r


def log_derivatives(
    m: AnnularModel,
    v0: float,
    N: int,
    K_max: int,
    degree: int | None = None,
) -> dict[tuple[int, int], np.ndarray]:
    """D^(n) f~_{k,l}(v0), n = 0..N, for every (k, l) with k <= K_max."""
    r = _check_v0(m, v0, "log_jet")
    degree = max(get_settings().quad_degree if degree is None else degree, K_max + 1)
    quad = sphere_quadrature(m.d, degree)
    points = r * quad.nodes

    p_max = N // 2
    even: dict[tuple[int, int], list[complex]] = {}
    radial: dict[tuple[int, int], list[complex]] = {}
    for p in range(p_max + 1):
        lap = project(np.asarray(m.laplacian_iterate(p, points)), m.d, degree, K_max)
        rad = project(np.asarray(m.radial_derivative(p, points)), m.d, degree, K_max)
        for index in lap:
            even.setdefault(index, []).append(lap[index])
            radial.setdefault(index, []).append(rad[index])

    jets = {}
    for (k, l), laps in even.items():
        derivs = np.zeros(N + 1, dtype=complex)
        for p in range(p_max + 1):
            derivs[2 * p] = math.exp(2 * p * v0) * laps[p]
            if 2 * p + 1 <= N:
                lam = k + 2 * p
                derivs[2 * p + 1] = (2 * p - lam) * derivs[2 * p] + math.exp((2 * p + 1) * v0) * radial[(k, l)][p]
        jets[(k, l)] = derivs
    logger.debug("log_derivatives: v0=%g, N=%d, K_max=%d, degree=%d", v0, N, K_max, degree)
    return jets


def log_jet(
    m: AnnularModel,
    k: int,
    l: int,
    v0: float,
    N: int,
    *,
    degree: int | None = None,
) -> LogCoefficientJet:
    """Jet of f~_{k,l} at v0."""
    derivs = log_derivatives(m, v0, N, k, degree)[(k, l)]
    return LogCoefficientJet(
        k=k,
        l=l,
        v0=float(v0),
        derivs=tuple(complex(c) for c in derivs),
        exponents=exponent_sequence_for(k, m.d),
        d=m.d,
        tau=m.tau_claimed,
    )


def jets_for_model(
    m: AnnularModel,
    v0: float,
    N: int,
    K_max: int,
    *,
    degree: int | None = None,
) -> dict[tuple[int, int], LogCoefficientJet]:
    """Jets for every (k, l) with k <= K_max from shared samples."""
    raw = log_derivatives(m, v0, N, K_max, degree)
    return {
        (k, l): LogCoefficientJet(
            k=k,
            l=l,
            v0=float(v0),
            derivs=tuple(complex(c) for c in derivs),
            exponents=exponent_sequence_for(k, m.d),
            d=m.d,
            tau=m.tau_claimed,
        )
        for (k, l), derivs in raw.items()
    }


def taylor_in_log(jet: LogCoefficientJet, v: complex) -> SeriesValue:
    """sum_n derivs[n] Phi_Lambda_n(v - v0), flagged when v is outside the guaranteed disc."""
    w = complex(v) - jet.v0
    table = fundamental_table(jet.exponents.prefix(jet.N), w)
    terms = np.asarray(jet.derivs) * table
    outside = abs(w) >= jet.guaranteed_radius()
    if outside:
        logger.warning(
            "taylor_in_log: |v - v0| = %g exceeds the guaranteed radius %g",
            abs(w),
            jet.guaranteed_radius(),
        )
    return SeriesValue(value=complex(np.sum(terms)), tail=float(abs(terms[-1])), outside_disc=outside)
