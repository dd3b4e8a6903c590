"""Generalized derivatives and Taylor-type expansions along exponent sequences."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
from scipy.special import gammaln, roots_legendre

from polyharm.config.settings import get_settings
from polyharm.core.errors import InvalidInputError
from polyharm.core.exponents import ExponentSequence
from polyharm.core.fundamental import fundamental_table
from polyharm.core.handles import FunctionHandle

logger = logging.getLogger(__name__)

MIN_RADIUS_COEFFS = 12


def _prefix(exponents: ExponentSequence | Sequence[complex], count: int) -> np.ndarray:
    """First ``count`` exponents as an array."""
    if count <= 0:
        return np.zeros(0, dtype=complex)
    if isinstance(exponents, ExponentSequence):
        return np.asarray(exponents.prefix(count - 1), dtype=complex)
    values = np.asarray([complex(v) for v in exponents], dtype=complex)
    if values.size < count:
        raise InvalidInputError(
            f"Need {count} exponents, got {values.size}",
            operation="generalized_derivative",
        )
    return values[:count]


def operator_coefficients(lambda_prefix: Sequence[complex]) -> np.ndarray:
    """Coefficients c_k of prod_j (D - lambda_j) = sum_k c_k D^k."""
    coeffs = np.ones(1, dtype=complex)
    for lam in lambda_prefix:
        shifted = np.concatenate(([0j], coeffs))
        coeffs = shifted - lam * np.concatenate((coeffs, [0j]))
    return coeffs


def generalized_derivative(
    f: FunctionHandle,
    exponents: ExponentSequence | Sequence[complex],
    n: int,
    x: float,
) -> complex:
    """D^(n) f(x) = (d/dx - lambda_0)...(d/dx - lambda_{n-1}) f(x)."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative", operation="generalized_derivative")
    derivs = f.derivatives(x, n)
    coeffs = operator_coefficients(_prefix(exponents, n))
    return complex(np.dot(coeffs, derivs))


def radius_from_rstar(r_star: float, beta: float) -> float:
    """(1/beta) ln(1 + beta R*) for beta > 0, R* itself for beta = 0."""
    if math.isinf(r_star):
        return math.inf
    if beta > 0:
        return math.log1p(beta * r_star) / beta
    return r_star


def radius_from_sigma(sigma: float, beta: float) -> float:
    """(1/beta) ln(1 + beta/sigma), or 1/sigma when beta = 0."""
    if sigma <= 0:
        return math.inf
    if beta > 0:
        return math.log1p(beta / sigma) / beta
    return 1.0 / sigma


def root_test(
    log_magnitudes: np.ndarray,
    orders: np.ndarray,
    zero_threshold: float | None = None,
) -> float:
    """Estimate limsup exp(log_magnitude / order) over the top third of the indices.

    Returns 0 when the window is empty, when the per-index roots decay
    against the order faster than order**-0.5 (factorial decay), or when
    the estimate is below ``zero_threshold``.
    """
    zero_threshold = get_settings().radius_zero_threshold if zero_threshold is None else zero_threshold
    count = len(orders)
    start = (2 * count) // 3
    logs = np.asarray(log_magnitudes[start:], dtype=float)
    ords = np.asarray(orders[start:], dtype=float)
    keep = np.isfinite(logs) & (ords > 0)
    if not np.any(keep):
        return 0.0
    roots = logs[keep] / ords[keep]
    if roots.size >= 3:
        slope = np.polyfit(np.log(ords[keep]), roots, 1)[0]
        if slope < -0.5:
            return 0.0
    estimate = float(np.exp(np.max(roots)))
    return estimate if estimate >= zero_threshold else 0.0


def _factorial_scaled_logs(coeffs: Sequence[complex], indices: np.ndarray) -> np.ndarray:
    mags = np.abs(np.asarray(coeffs, dtype=complex)[indices])
    with np.errstate(divide="ignore"):
        return np.log(mags) - gammaln(indices + 1)


def convergence_radius(
    coeffs: Sequence[complex],
    beta: float,
    zero_threshold: float | None = None,
) -> float:
    """Radius of sum a_n Phi_Lambda_n(x - x0) from 1/R* = limsup |a_n/n!|^(1/n)."""
    if len(coeffs) > 0 and not np.any(np.asarray(coeffs, dtype=complex)):
        return math.inf
    if len(coeffs) < MIN_RADIUS_COEFFS:
        raise InvalidInputError(
            f"Radius estimation needs at least {MIN_RADIUS_COEFFS} coefficients, got {len(coeffs)}",
            operation="convergence_radius",
        )
    indices = np.arange(1, len(coeffs))
    estimate = root_test(_factorial_scaled_logs(coeffs, indices), indices, zero_threshold)
    r_star = math.inf if estimate == 0.0 else 1.0 / estimate
    return radius_from_rstar(r_star, beta)


def even_growth_rate(coeffs: Sequence[complex], zero_threshold: float | None = None) -> float | None:
    """sigma = limsup (|a_2n|/(2n)!)^(1/2n), or None when too few coefficients."""
    indices = np.arange(2, len(coeffs), 2)
    if indices.size < MIN_RADIUS_COEFFS // 2:
        return None
    return root_test(_factorial_scaled_logs(coeffs, indices), indices, zero_threshold)


@dataclass(frozen=True)
class GeneralizedTaylorSeries:
    """Expansion f(x) = sum a_n Phi_Lambda_n(x - x0) with a_n = D^(n) f(x0)."""

    x0: float
    coeffs: tuple[complex, ...]
    exponents: ExponentSequence
    R_star: float | None
    radius: float | None
    sigma: float | None = None

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @property
    def beta(self) -> float:
        return self.exponents.beta

    def radius_from_sigma(self) -> float | None:
        """Convergence radius derived from the even-order growth rate."""
        if self.sigma is None:
            return None
        return radius_from_sigma(self.sigma, self.beta)

    def terms(self, x: complex) -> np.ndarray:
        """a_n Phi_Lambda_n(x - x0) for n = 0..N."""
        table = fundamental_table(self.exponents.prefix(self.N), complex(x) - self.x0)
        return np.asarray(self.coeffs) * table

    def partial_sum(self, x: complex, m: int | None = None) -> complex:
        """s_m(x) = sum_{n <= m} a_n Phi_Lambda_n(x - x0)."""
        m = self.N if m is None else m
        return complex(np.sum(self.terms(x)[: m + 1]))

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "x0": self.x0,
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
            "exponents": self.exponents.to_dict(self.N),
            "R_star": self.R_star,
            "radius": self.radius,
            "sigma": self.sigma,
        }


def taylor_expand(
    f: FunctionHandle,
    exponents: ExponentSequence,
    x0: float,
    N: int,
) -> GeneralizedTaylorSeries:
    """Coefficients D^(n) f(x0), n = 0..N, with radius analytics."""
    if N < 0:
        raise InvalidInputError("N must be nonnegative", operation="taylor_expand")
    derivs = f.derivatives(x0, N)
    lams = _prefix(exponents, N)

    coeffs = []
    operator = np.ones(1, dtype=complex)
    for n in range(N + 1):
        coeffs.append(complex(np.dot(operator, derivs[: n + 1])))
        if n < N:
            operator = np.concatenate(([0j], operator)) - lams[n] * np.concatenate((operator, [0j]))

    r_star = radius = sigma = None
    if len(coeffs) >= MIN_RADIUS_COEFFS:
        r_star = convergence_radius(coeffs, 0.0)
        radius = radius_from_rstar(r_star, exponents.beta)
        sigma = even_growth_rate(coeffs)

    return GeneralizedTaylorSeries(
        x0=float(x0),
        coeffs=tuple(coeffs),
        exponents=exponents,
        R_star=r_star,
        radius=radius,
        sigma=sigma,
    )


@lru_cache(maxsize=8)
def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_legendre(order)
    return nodes, weights


def taylor_remainder(
    f: FunctionHandle,
    exponents: ExponentSequence,
    x0: float,
    m: int,
    x: float,
    *,
    tol: float | None = None,
    max_depth: int | None = None,
) -> complex:
    """R_m(x) = integral over [x0, x] of D^(m+1) f(t) Phi_Lambda_m(x - t) dt."""
    settings = get_settings()
    tol = settings.remainder_tol if tol is None else tol
    max_depth = settings.remainder_max_depth if max_depth is None else max_depth
    if x < x0:
        raise InvalidInputError("taylor_remainder needs x >= x0", operation="taylor_remainder")
    if x == x0:
        return 0j

    lams = _prefix(exponents, m + 1)
    operator = operator_coefficients(lams[: m + 1])
    phi_prefix = lams[: m + 1]
    nodes, weights = _gauss_legendre(10)
    length = x - x0

    def rule(a: float, b: float) -> complex:
        t = 0.5 * (b - a) * nodes + 0.5 * (b + a)
        top = np.array([np.dot(operator, f.derivatives(ti, m + 1)) for ti in t])
        phi = fundamental_table(phi_prefix, x - t)[m]
        return complex(0.5 * (b - a) * np.dot(weights, top * phi))

    def adapt(a: float, b: float, whole: complex, depth: int) -> complex:
        mid = 0.5 * (a + b)
        left, right = rule(a, mid), rule(mid, b)
        if abs(left + right - whole) <= tol * (b - a) / length:
            return left + right
        if depth >= max_depth:
            logger.warning("taylor_remainder: depth %d reached on [%g, %g]", depth, a, b)
            return left + right
        return adapt(a, mid, left, depth + 1) + adapt(mid, b, right, depth + 1)

    return adapt(x0, x, rule(x0, x), 1)


def factorial_root_sequence(lambda_prefix: Sequence[complex], x: float) -> np.ndarray:
    """(n! Phi_Lambda_n(x))^(1/n) for n = 1..len(prefix) - 1, for real positive values."""
    table = fundamental_table(lambda_prefix, complex(x)).real
    n = np.arange(1, len(table))
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.exp((gammaln(n + 1) + np.log(table[1:])) / n)
