"""Fundamental functions of constant-coefficient differential operators.

Phi_Lambda_n is the solution of (d/dx - lambda_0)...(d/dx - lambda_n) Phi = 0 with
Phi^(k)(0) = 0 for k < n and Phi^(n)(0) = 1. Three evaluators are provided: a Taylor
series driven by complete homogeneous symmetric polynomials, trapezoidal quadrature
of the Cauchy integral of exp(zw)/q(w), and closed forms.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from scipy.special import gammaln

from polyharm.config.settings import get_settings
from polyharm.core.errors import (
    ConfigurationError,
    InvalidInputError,
    TruncationError,
)
from polyharm.core.exponents import multiplicity_table
from polyharm.core.partial_fractions import partial_fractions

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps


class Strategy(Enum):
    """Evaluation strategy for Phi."""

    SERIES = "series"
    CONTOUR = "contour"
    CLOSED_FORM = "closed-form"

    def __str__(self) -> str:
        return self.value


class ClosedForm(Enum):
    """Closed-form family of a prefix."""

    POLYNOMIAL = "polynomial"
    EQUIDISTANT = "equidistant"
    DISTINCT = "distinct-roots"
    REPEATED = "repeated-roots"
    NONE = "none"

    def __str__(self) -> str:
        return self.value


class BoundMode(Enum):
    """Majorant used by bound_fundamental."""

    MAX_BOUND = "max-bound"
    LINEAR_GROWTH = "linear-growth"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LinearGrowth:
    """Envelope |lambda_n| <= alpha + (1 + eps) * beta * n."""

    alpha: float
    beta: float
    eps: float = 0.0


def _as_prefix(lambda_prefix: Sequence[complex], operation: str) -> np.ndarray:
    lams = np.asarray([complex(v) for v in lambda_prefix], dtype=complex)
    if lams.size == 0:
        raise InvalidInputError("Exponent prefix is empty", operation=operation)
    return lams


def fundamental_taylor_coeffs(lambda_prefix: Sequence[complex], K: int) -> list[complex]:
    """Return Phi^(k)(0) for k = 0..K.

    Phi^(k)(0) = h_{k-n}(lambda_0, ..., lambda_n), built with
    h_m(l_0..l_j) = h_m(l_0..l_{j-1}) + l_j * h_{m-1}(l_0..l_j).
    """
    lams = _as_prefix(lambda_prefix, "fundamental_taylor_coeffs")
    n = lams.size - 1
    if K < n:
        raise InvalidInputError(f"K={K} is below n={n}", operation="fundamental_taylor_coeffs")

    count = K - n + 1
    h = [complex(1.0)] + [complex(0.0)] * (count - 1)
    for m in range(1, count):
        h[m] = h[m - 1] * lams[0]
    for lam in lams[1:]:
        for m in range(1, count):
            h[m] = h[m] + lam * h[m - 1]

    return [complex(0.0)] * n + h


def fundamental_table(
    lambda_prefix: Sequence[complex],
    z: complex | np.ndarray,
    *,
    tol: float | None = None,
    max_terms: int | None = None,
) -> np.ndarray:
    """Evaluate Phi_Lambda_0, ..., Phi_Lambda_n at every point of ``z`` by series.

    Row i of the result is Phi_Lambda_i. The scaled terms
    T[i][m] = h_m(lambda_0..lambda_i) z^(i+m)/(i+m)! obey
    T[i][m] = (T[i-1][m] + lambda_i T[i][m-1]) z/(i+m), so no factorial is formed.
    Summation stops once the Poisson tail of |z|^i/i! * sum (M_i|z|)^j/j! is below
    ``tol`` relative to the partial sum (or below rounding of the majorant).
    """
    settings = get_settings()
    tol = settings.series_tol if tol is None else tol
    max_terms = settings.series_max_terms if max_terms is None else max_terms

    lams = _as_prefix(lambda_prefix, "fundamental_table")
    n = lams.size - 1
    z_arr = np.asarray(z, dtype=complex)
    shape = z_arr.shape
    zf = z_arr.ravel()
    absz = np.abs(zf)

    col = np.empty((n + 1, zf.size), dtype=complex)
    col[0] = 1.0
    for i in range(1, n + 1):
        col[i] = col[i - 1] * zf / i
    total = col.copy()

    idx = np.arange(n + 1)
    reach = np.maximum.accumulate(np.abs(lams))[:, None] * absz[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        log_absz = np.log(absz)
        log_scale = np.where(idx[:, None] == 0, 0.0, idx[:, None] * log_absz[None, :])
        log_scale = log_scale - gammaln(idx + 1)[:, None]
        log_reach = np.log(reach)
    log_floor = np.log(_EPS) + log_scale + reach

    m = 0
    while True:
        m += 1
        new = np.empty_like(col)
        new[0] = col[0] * lams[0] * zf / m
        for i in range(1, n + 1):
            new[i] = (new[i - 1] + lams[i] * col[i]) * zf / (i + m)
        total += new
        col = new

        ratio = reach / (m + 2)
        with np.errstate(divide="ignore", invalid="ignore"):
            log_tail = log_scale + (m + 1) * log_reach - gammaln(m + 2)
            log_tail = np.where(
                ratio < 0.999, log_tail - np.log1p(-np.minimum(ratio, 0.999)), np.inf
            )
            log_tail = np.where(reach == 0.0, -np.inf, log_tail)
            log_target = np.maximum(np.log(tol) + np.log(np.abs(total)), log_floor)
        if np.all(log_tail <= log_target):
            break
        if m >= max_terms:
            achieved = float(np.max(np.exp(np.minimum(log_tail - log_target, 700.0)))) * tol
            raise TruncationError(
                f"Series for Phi did not converge within {max_terms} terms",
                operation="eval_fundamental",
                achieved_bound=achieved,
            )

    logger.debug("fundamental_table: n=%d, %d series terms", n, m + 1)
    return total.reshape((n + 1,) + shape)


def _contour_values(
    lams: np.ndarray,
    z: np.ndarray,
    radius: float | None,
    tol: float,
) -> np.ndarray:
    settings = get_settings()
    max_abs = float(np.max(np.abs(lams)))
    r = 2.0 * max(1.0, max_abs) if radius is None else float(radius)
    if r <= max_abs:
        raise ConfigurationError(
            f"Contour radius {r} does not exceed max|lambda| = {max_abs}",
            operation="eval_fundamental",
            radius=r,
        )

    zf = z.ravel()
    nodes = settings.contour_nodes
    previous: np.ndarray | None = None
    while True:
        w = r * np.exp(2j * np.pi * np.arange(nodes) / nodes)
        qw = np.prod(w[:, None] - lams[None, :], axis=1)
        integrand = w[None, :] * np.exp(zf[:, None] * w[None, :]) / qw[None, :]
        values = integrand.mean(axis=1)
        if previous is not None:
            scale = np.abs(integrand).max(axis=1)
            limit = np.maximum(tol * np.abs(values), 64 * _EPS * scale)
            if np.all(np.abs(values - previous) <= limit):
                logger.debug("contour: r=%g, %d nodes", r, nodes)
                return values.reshape(z.shape)
        if 2 * nodes > settings.contour_max_nodes:
            gap = float(np.max(np.abs(values - previous))) if previous is not None else math.inf
            raise TruncationError(
                f"Contour rule did not settle within {settings.contour_max_nodes} nodes",
                operation="eval_fundamental",
                achieved_bound=gap,
            )
        previous = values
        nodes *= 2


def classify_closed_form(
    lambda_prefix: Sequence[complex], tol: float = 1e-9
) -> tuple[ClosedForm, tuple[complex, complex] | None]:
    """Pick the closed form of Phi for a prefix.

    Returns the tag and (alpha, omega) for equidistant prefixes.
    """
    lams = _as_prefix(lambda_prefix, "classify_closed_form")
    table = multiplicity_table(lams, tol=tol)
    if len(table) == 1:
        return ClosedForm.POLYNOMIAL, None
    if lams.size >= 2:
        gaps = np.diff(lams)
        omega = gaps[0]
        if abs(omega) > 0 and np.all(np.abs(gaps - omega) <= tol * max(1.0, abs(omega))):
            return ClosedForm.EQUIDISTANT, (complex(lams[0]), complex(omega))
    mults = table.values()
    if max(mults) == 1:
        return ClosedForm.DISTINCT, None
    if max(mults) == 2:
        return ClosedForm.REPEATED, None
    return ClosedForm.NONE, None


def _closed_form_values(phi: FundamentalFunction, z: np.ndarray) -> np.ndarray:
    lams = np.asarray(phi.exponents, dtype=complex)
    n = phi.n
    kind = phi.closed_form
    if kind == ClosedForm.POLYNOMIAL:
        return z**n / math.factorial(n) * np.exp(lams[0] * z)
    if kind == ClosedForm.EQUIDISTANT:
        alpha, omega = phi.equidistant
        return np.exp(alpha * z) * (np.expm1(omega * z) / omega) ** n / math.factorial(n)
    if kind == ClosedForm.DISTINCT:
        total = np.zeros_like(z)
        for j, lam in enumerate(lams):
            q_prime = np.prod(np.delete(lam - lams, j))
            total = total + np.exp(lam * z) / q_prime
        return total
    if kind == ClosedForm.REPEATED:
        total = np.zeros_like(z)
        for term in partial_fractions(lams, tol=phi.root_tol):
            total = total + term.evaluate(z)
        return total
    raise InvalidInputError(
        "No closed form for roots of multiplicity above 2",
        operation="eval_fundamental",
    )


@dataclass(frozen=True)
class FundamentalFunction:
    """Phi_Lambda_n with its Taylor coefficients and closed-form tag."""

    exponents: tuple[complex, ...]
    taylor_coeffs: tuple[complex, ...]
    multiplicity_table: dict[complex, int] = field(compare=False)
    closed_form: ClosedForm
    equidistant: tuple[complex, complex] | None = None
    root_tol: float = 1e-9

    @classmethod
    def from_exponents(
        cls,
        lambda_prefix: Sequence[complex],
        K: int | None = None,
        root_tol: float | None = None,
    ) -> FundamentalFunction:
        """Build Phi for the prefix; Taylor data is kept up to index K (default n + 16)."""
        root_tol = get_settings().root_tol if root_tol is None else root_tol
        lams = tuple(complex(v) for v in lambda_prefix)
        n = len(lams) - 1
        K = n + 16 if K is None else K
        kind, params = classify_closed_form(lams, tol=root_tol)
        return cls(
            exponents=lams,
            taylor_coeffs=tuple(fundamental_taylor_coeffs(lams, K)),
            multiplicity_table=multiplicity_table(lams, tol=root_tol),
            closed_form=kind,
            equidistant=params,
            root_tol=root_tol,
        )

    @property
    def n(self) -> int:
        return len(self.exponents) - 1

    def extend(self, lam: complex) -> FundamentalFunction:
        """Phi for the prefix with one more exponent."""
        return FundamentalFunction.from_exponents(
            self.exponents + (complex(lam),),
            K=len(self.taylor_coeffs),
            root_tol=self.root_tol,
        )

    def __call__(self, z: complex | np.ndarray, strategy: Strategy | str = Strategy.SERIES):
        return eval_fundamental(self, z, strategy)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "exponents": [[lam.real, lam.imag] for lam in self.exponents],
            "taylor_coeffs": [[c.real, c.imag] for c in self.taylor_coeffs],
            "multiplicities": [
                {"root": [root.real, root.imag], "multiplicity": mult}
                for root, mult in self.multiplicity_table.items()
            ],
            "closed_form": self.closed_form.value,
        }


def eval_fundamental(
    phi: FundamentalFunction,
    z: complex | np.ndarray,
    strategy: Strategy | str = Strategy.SERIES,
    *,
    contour_radius: float | None = None,
    tol: float | None = None,
) -> complex | np.ndarray:
    """Evaluate Phi_Lambda_n at a point or an array of points."""
    strategy = Strategy(strategy)
    tol = get_settings().series_tol if tol is None else tol
    z_arr = np.asarray(z, dtype=complex)

    if strategy == Strategy.SERIES:
        values = fundamental_table(phi.exponents, z_arr, tol=tol)[phi.n]
    elif strategy == Strategy.CONTOUR:
        values = _contour_values(np.asarray(phi.exponents), z_arr, contour_radius, tol)
    else:
        values = _closed_form_values(phi, z_arr)

    if z_arr.ndim == 0:
        return complex(values)
    return values


def check_recursion(
    phi_np1: FundamentalFunction,
    phi_n: FundamentalFunction,
    z: complex,
    h: float,
    strategy: Strategy | str = Strategy.SERIES,
) -> float:
    """Residual of Phi_{n+1}' - lambda_{n+1} Phi_{n+1} - Phi_n by central differences."""
    if phi_np1.exponents[:-1] != phi_n.exponents or len(phi_np1.exponents) != len(phi_n.exponents) + 1:
        raise InvalidInputError(
            "phi_np1 must extend phi_n by exactly one exponent",
            operation="check_recursion",
        )
    if h <= 0:
        raise InvalidInputError("Step h must be positive", operation="check_recursion")

    z = complex(z)
    points = np.array([z + h, z - h, z])
    upper = eval_fundamental(phi_np1, points, strategy)
    lower = eval_fundamental(phi_n, z, strategy)
    derivative = (upper[0] - upper[1]) / (2 * h)
    lam = phi_np1.exponents[-1]
    return float(abs(derivative - lam * upper[2] - lower))


def bound_fundamental(
    lambda_prefix: Sequence[complex],
    abs_z: float,
    mode: BoundMode | str = BoundMode.MAX_BOUND,
    growth: LinearGrowth | None = None,
) -> float:
    """Upper bound for |Phi_Lambda_n(z)| over |z| = abs_z."""
    lams = _as_prefix(lambda_prefix, "bound_fundamental")
    mode = BoundMode(mode)
    n = lams.size - 1
    if abs_z < 0:
        raise InvalidInputError("abs_z must be nonnegative", operation="bound_fundamental")
    if abs_z == 0:
        return 1.0 if n == 0 else 0.0

    if mode == BoundMode.MAX_BOUND:
        m_n = float(np.max(np.abs(lams)))
        return math.exp(n * math.log(abs_z) - math.lgamma(n + 1) + m_n * abs_z)

    if growth is None or growth.beta == 0:
        raise InvalidInputError(
            "linear-growth mode needs beta > 0; use max-bound for bounded exponents",
            operation="bound_fundamental",
        )
    rate = (1.0 + growth.eps) * growth.beta
    envelope = growth.alpha + rate * np.arange(n + 1)
    if np.any(np.abs(lams) > envelope * (1 + 1e-12) + 1e-12):
        raise InvalidInputError(
            "Exponents exceed the linear-growth envelope",
            operation="bound_fundamental",
        )
    log_value = (
        growth.alpha * abs_z
        + n * math.log(math.expm1(rate * abs_z) / rate)
        - math.lgamma(n + 1)
    )
    return math.exp(log_value)
