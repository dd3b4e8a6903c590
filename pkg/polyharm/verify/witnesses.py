"""Generalized Rolle and mean-value witnesses and the odd-order derivative estimates.

Throughout, D_lambda f = f' - lambda f and D_{l1} D_{l0} f = f'' - (l0 + l1) f' + l0 l1 f.
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln

from polyharm.core.errors import PreconditionError, SearchFailure
from polyharm.core.exponents import ExponentSequence
from polyharm.core.handles import FunctionHandle
from polyharm.core.taylor import factorial_root_sequence, operator_coefficients
from polyharm.extension.jet import log_derivatives
from polyharm.models.base import AnnularModel
from polyharm.spherical.radial import exponent_sequence_for
from polyharm.verify.base import DEFAULT_TOLERANCE, WitnessReport

logger = logging.getLogger(__name__)

SCAN_POINTS = 256
GRID_POINTS = 64
BOUNDARY_TOL = 1e-10


def d_lambda(f: FunctionHandle, lam: float, x: float) -> float:
    """Real part of D_lambda f(x)."""
    value, slope = f.derivatives(x, 1)
    return float((slope - lam * value).real)


def _scan_root(g: Callable[[float], float], a: float, b: float, tol: float) -> float:
    """Interior zero of g by a uniform scan followed by brentq on the first sign change."""
    xs = np.linspace(a, b, SCAN_POINTS)
    values = np.array([g(x) for x in xs])
    interior = np.abs(values[1:-1]) <= tol
    if np.any(interior):
        return float(xs[1:-1][np.argmax(interior)])
    for i in range(SCAN_POINTS - 1):
        if values[i] * values[i + 1] < 0:
            return float(brentq(g, xs[i], xs[i + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps))
    raise SearchFailure(
        f"No sign change of the target on [{a}, {b}] over {SCAN_POINTS} samples",
        operation="witness_search",
    )


def rolle_point(f: FunctionHandle, lam: float, a: float, b: float, *, tol: float = DEFAULT_TOLERANCE) -> WitnessReport:
    """Find xi in (a, b) with D_lambda f(xi) = 0 given e^(-lambda a) f(a) = e^(-lambda b) f(b)."""
    inputs = {"f": f.name, "lambda": lam, "a": a, "b": b}
    if not a < b:
        raise PreconditionError("Need a < b", operation="rolle_point", **inputs)
    fa, fb = f(a).real, f(b).real
    left, right = math.exp(-lam * a) * fa, math.exp(-lam * b) * fb
    if abs(left - right) > BOUNDARY_TOL * max(1.0, abs(left), abs(right)):
        raise PreconditionError(
            f"Weighted boundary values differ: {left!r} vs {right!r}",
            operation="rolle_point",
            **inputs,
        )
    xi = _scan_root(lambda x: d_lambda(f, lam, x), a, b, tol)
    residual = abs(d_lambda(f, lam, xi))
    logger.debug("rolle_point: xi=%r residual=%g", xi, residual)
    return WitnessReport(theorem_id="generalized-rolle", inputs=inputs, witness=xi, residual=residual, tolerance=tol)


def mean_value_target(f: FunctionHandle, lam: float, a: float, b: float) -> float:
    """lambda (e^(lambda a) f(b) - e^(lambda b) f(a)) / (e^(lambda b) - e^(lambda a)).

    Divided through by e^(lambda a): lambda (f(b) - f(a)) / expm1(lambda h) - lambda f(a).
    """
    h = b - a
    fa, fb = f(a).real, f(b).real
    return lam * (fb - fa) / math.expm1(lam * h) - lam * fa


def mean_value_point(
    f: FunctionHandle, lam: float, a: float, b: float, *, tol: float = DEFAULT_TOLERANCE
) -> WitnessReport:
    """Find xi in (a, b) with D_lambda f(xi) equal to the mean-value target."""
    inputs = {"f": f.name, "lambda": lam, "a": a, "b": b}
    if not a < b:
        raise PreconditionError("Need a < b", operation="mean_value_point", **inputs)
    if lam == 0:
        raise PreconditionError("lambda must be nonzero", operation="mean_value_point", **inputs)
    target = mean_value_target(f, lam, a, b)
    xi = _scan_root(lambda x: d_lambda(f, lam, x) - target, a, b, tol)
    residual = abs(d_lambda(f, lam, xi) - target)
    return WitnessReport(
        theorem_id="generalized-mean-value",
        inputs={**inputs, "target": target},
        witness=xi,
        residual=residual,
        tolerance=tol,
    )


def lemma_sides(lam: float, h: float) -> tuple[float, float]:
    """(|lambda (e^(lambda a) + e^(lambda b)) / (e^(lambda a) - e^(lambda b))|, 2 e^(|lambda| h) / h).

    The left side equals |lambda coth(lambda h / 2)| and does not depend on a.
    """
    lhs = abs(lam / math.tanh(lam * h / 2))
    rhs = 2.0 * math.exp(abs(lam) * h) / h
    return lhs, rhs


def _relative_excess(lhs: float, rhs: float) -> float:
    if lhs <= rhs:
        return 0.0
    return (lhs - rhs) / max(rhs, np.finfo(float).tiny)


def check_odd_derivative_bound(
    f: FunctionHandle,
    lambda0: float,
    lambda1: float,
    a: float,
    b: float,
    *,
    grid: int = GRID_POINTS,
) -> WitnessReport:
    """|D_l0 f(a)| <= 4 e^((|l0| + |l1|) h)/h max(|f(a)|, |f(b)|) + 2 max|D_l1 D_l0 f| h e^(|l1| h).

    The maximum runs over a uniform grid; the lemma inequality for lambda0 is checked alongside.
    """
    inputs = {"f": f.name, "lambda0": lambda0, "lambda1": lambda1, "a": a, "b": b}
    if not a < b:
        raise PreconditionError("Need a < b", operation="check_odd_derivative_bound", **inputs)
    h = b - a
    f_a = f.derivatives(a, 1)
    lhs = abs(f_a[1] - lambda0 * f_a[0])
    second = 0.0
    for t in np.linspace(a, b, grid):
        v, d1, d2 = f.derivatives(float(t), 2)
        second = max(second, abs(d2 - (lambda0 + lambda1) * d1 + lambda0 * lambda1 * v))
    boundary = max(abs(f_a[0]), abs(f(b)))
    rhs = 4.0 * math.exp((abs(lambda0) + abs(lambda1)) * h) / h * boundary + 2.0 * second * h * math.exp(abs(lambda1) * h)

    residual = _relative_excess(lhs, rhs)
    witness: dict[str, float] = {"lhs": float(lhs), "rhs": float(rhs), "slack": float(rhs - lhs)}
    if lambda0 != 0:
        lem_lhs, lem_rhs = lemma_sides(lambda0, h)
        witness.update(lemma_lhs=lem_lhs, lemma_rhs=lem_rhs)
        residual = max(residual, _relative_excess(lem_lhs, lem_rhs))
    return WitnessReport(theorem_id="odd-derivative-bound", inputs=inputs, witness=witness, residual=residual)


class DerivativeSource(ABC):
    """Generalized derivatives D^(n) f at arbitrary points of an interval."""

    name: str = "source"
    exponents: ExponentSequence

    @abstractmethod
    def derivatives(self, x: np.ndarray, n: int) -> np.ndarray:
        """Array of shape (n + 1, len(x)) with D^(0..n) f at each point."""
        ...


class HandleSource(DerivativeSource):
    """Generalized derivatives of a function handle."""

    def __init__(self, handle: FunctionHandle, exponents: ExponentSequence) -> None:
        self.handle = handle
        self.exponents = exponents
        self.name = handle.name

    def derivatives(self, x: np.ndarray, n: int) -> np.ndarray:
        lams = self.exponents.prefix(n)
        rows = [operator_coefficients(lams[:m]) for m in range(n + 1)]
        out = np.zeros((n + 1, len(x)), dtype=complex)
        for i, xi in enumerate(x):
            ordinary = self.handle.derivatives(float(xi), n)
            for m, coeffs in enumerate(rows):
                out[m, i] = np.dot(coeffs, ordinary[: m + 1])
        return out


class ModelJetSource(DerivativeSource):
    """D^(n) f~_{k,l}(v) of a model in the log variable."""

    def __init__(self, m: AnnularModel, k: int, l: int, degree: int | None = None) -> None:
        self.model = m
        self.k = k
        self.l = l
        self.degree = degree
        self.exponents = exponent_sequence_for(k, m.d)
        self.name = f"{m.family}[k={k},l={l}]"

    def derivatives(self, x: np.ndarray, n: int) -> np.ndarray:
        out = np.zeros((n + 1, len(x)), dtype=complex)
        for i, v in enumerate(x):
            out[:, i] = log_derivatives(self.model, float(v), n, self.k, self.degree)[(self.k, self.l)]
        return out


def _log_factorial_power(order: np.ndarray, rate: float) -> np.ndarray:
    return gammaln(order + 1) + order * math.log(rate)


def check_even_to_odd(
    source: DerivativeSource,
    v0: float,
    delta: float,
    n_max: int,
    *,
    grid: int = GRID_POINTS,
) -> WitnessReport:
    """Odd orders bounded by neighbouring even orders, then an odd-order envelope fit.

    For m <= n_max and x in [v0, v0 + delta]:
    |D^(2m+1) f(x)| <= 2 max(2/delta, delta) e^((|l_2m| + |l_2m+1|) delta)
    (max |D^(2m) f| + max |D^(2m+2) f|), maxima over [v0, v0 + 2 delta].
    Then sigma is fitted from the even orders and C2 from
    |D^(2n+1) f| <= C2 (2n+1)! (sigma + eps)^(2n+1).
    """
    inputs = {"source": source.name, "v0": v0, "delta": delta, "n_max": n_max}
    if delta <= 0 or n_max < 0:
        raise PreconditionError("Need delta > 0 and n_max >= 0", operation="check_even_to_odd", **inputs)
    xs = np.linspace(v0, v0 + 2 * delta, grid)
    inner = xs <= v0 + delta * (1 + 1e-12)
    top = 2 * n_max + 2
    derivs = np.abs(source.derivatives(xs, top))
    outer_max = derivs.max(axis=1)
    inner_max = derivs[:, inner].max(axis=1)
    lams = source.exponents.prefix(top)

    factor = 2.0 * max(2.0 / delta, delta)
    floor = 1e-12 * float(outer_max.max())
    residual = 0.0
    worst_ratio = 0.0
    for m in range(n_max + 1):
        spread = math.exp((abs(lams[2 * m]) + abs(lams[2 * m + 1])) * delta)
        rhs = factor * spread * (outer_max[2 * m] + outer_max[2 * m + 2])
        lhs = inner_max[2 * m + 1]
        residual = max(residual, _relative_excess(lhs, rhs + floor))
        if rhs > 0:
            worst_ratio = max(worst_ratio, lhs / rhs)

    even_orders = np.arange(2, top + 1, 2)
    even = outer_max[even_orders]
    with np.errstate(divide="ignore"):
        sigma_n = np.exp((np.log(even) - gammaln(even_orders + 1)) / even_orders)
    window = sigma_n[len(sigma_n) // 2 :]
    window = window[np.isfinite(window) & (window > 0)]
    sigma = float(window.max()) if window.size else 0.0
    eps = 0.05 * sigma if sigma > 0 else 1e-3

    odd_orders = np.arange(1, top, 2)
    odd = inner_max[odd_orders]
    with np.errstate(divide="ignore"):
        logs = np.log(odd) - _log_factorial_power(odd_orders, sigma + eps)
    c2 = float(np.exp(np.max(logs))) if np.any(odd > 0) else 0.0
    if not math.isfinite(c2):
        residual = math.inf

    witness = {"sigma": sigma, "epsilon": eps, "C2": c2, "worst_ratio": worst_ratio}
    return WitnessReport(theorem_id="even-to-odd", inputs=inputs, witness=witness, residual=residual)


def check_factorial_root_limit(
    lambda_prefix: Sequence[complex],
    x: float,
    expected: float,
    tolerance: float,
    theorem_id: str = "factorial-root-limit",
    compare_at: int | None = None,
) -> WitnessReport:
    """Relative distance of (n! Phi_Lambda_n(x))^(1/n) at the last n from ``expected``.

    With ``compare_at`` the distance at the last n must also not exceed the
    distance at n = compare_at; otherwise the residual is inf.
    """
    n = len(lambda_prefix) - 1
    if compare_at is not None and not 1 <= compare_at < n:
        raise PreconditionError(
            f"compare_at must lie in [1, {n}), got {compare_at}",
            operation="check_factorial_root_limit",
        )
    roots = factorial_root_sequence(lambda_prefix, x)
    last = float(roots[-1])
    deviation = abs(last / expected - 1.0) if math.isfinite(last) else math.inf
    witness: dict[str, Any] = {"root": last, "deviation": deviation}
    residual = deviation
    if compare_at is not None:
        mid = float(roots[compare_at - 1])
        earlier = abs(mid / expected - 1.0) if math.isfinite(mid) else math.inf
        witness["deviation_at_compare"] = earlier
        if not deviation <= earlier:
            residual = math.inf
    return WitnessReport(
        theorem_id=theorem_id,
        inputs={"n": n, "x": x, "expected": expected, "compare_at": compare_at},
        witness=witness,
        residual=residual,
        tolerance=tolerance,
    )
