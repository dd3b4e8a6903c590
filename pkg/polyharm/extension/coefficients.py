"""Extension coefficients a_{k,l,j} and the series F_{k,l}(z) = sum_j a_{k,l,j} z^lambda_j."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from polyharm.core.errors import (
    DomainError,
    InvalidInputError,
    InvariantViolation,
    TruncationError,
    WrongBranchError,
)
from polyharm.core.partial_fractions import partial_fractions
from polyharm.core.taylor import root_test
from polyharm.extension.jet import LogCoefficientJet
from polyharm.spherical.lie import CUT_TOL
from polyharm.spherical.radial import exponent_sequence_for, odd_partner_index

logger = logging.getLogger(__name__)

NOISE_FLOOR = 1e-14
EPS_ABSOLUTE = 1e-3
EPS_RELATIVE = 0.05


@dataclass(frozen=True)
class ExtensionSeries:
    """Coefficients a_{k,l,j}, j = 0..J, of one Fourier-Laplace coefficient.

    ``log_flags[j]`` marks even-d basis elements z^lambda_j log z.
    """

    k: int
    l: int
    d: int
    coeffs: tuple[complex, ...]
    exponents: tuple[complex, ...]
    trunc_error: float
    log_flags: tuple[bool, ...] = ()
    v0: float = 0.0
    tau: float = 0.0

    def __post_init__(self) -> None:
        if not self.log_flags:
            object.__setattr__(self, "log_flags", (False,) * len(self.coeffs))

    @property
    def J(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coeffs_even(self) -> tuple[complex, ...]:
        return self.coeffs[0::2]

    @property
    def coeffs_odd(self) -> tuple[complex, ...]:
        return self.coeffs[1::2]

    @property
    def even_d_log_flags(self) -> tuple[bool, ...]:
        return self.log_flags[1::2]

    def guaranteed_radius(self) -> float:
        """1/(2 tau), infinite for type zero."""
        return math.inf if self.tau <= 0 else 1.0 / (2.0 * self.tau)

    def __call__(self, z: complex | np.ndarray) -> complex | np.ndarray:
        return eval_Fkl(self, z)

    def to_rows(self) -> list[dict[str, Any]]:
        """Rows of the extension-series dump format."""
        return [
            {"k": self.k, "l": self.l, "j": j, "re": c.real, "im": c.imag, "log_flag": flag}
            for j, (c, flag) in enumerate(zip(self.coeffs, self.log_flags))
        ]


def _eps_hat(tau: float) -> float:
    return EPS_RELATIVE * tau if tau > 0 else EPS_ABSOLUTE


def _tail_bound(last_terms: list[float], v0: float, tau: float) -> float:
    """Geometric majorant of the terms dropped after n = N."""
    largest = max(last_terms, default=0.0)
    if largest == 0.0:
        return 0.0
    ratio = 2.0 * math.exp(v0) * (tau + _eps_hat(tau))
    if ratio >= 1.0:
        return math.inf
    return largest * ratio / (1.0 - ratio)


def _check_truncation(series: ExtensionSeries, tail_tol: float | None, operation: str) -> ExtensionSeries:
    if tail_tol is not None and not series.trunc_error <= tail_tol:
        raise TruncationError(
            f"Tail bound {series.trunc_error:g} exceeds {tail_tol:g}; raise N",
            achieved_bound=series.trunc_error,
            operation=operation,
        )
    return series


def _check_J(jet: LogCoefficientJet, J: int, operation: str) -> None:
    if J < 0 or J > jet.N:
        raise InvalidInputError(f"Need 0 <= J <= N = {jet.N}, got {J}", operation=operation)


def extension_coeffs(jet: LogCoefficientJet, J: int, *, tail_tol: float | None = None) -> ExtensionSeries:
    """a_j = e^(-lambda_j v0) sum_{n=j}^{N} D^(n) f~(v0) / q_n'(lambda_j) for odd d.

    q_n'(lambda_j) = prod_{s <= n, s != j}(lambda_j - lambda_s) is built up one factor per n.
    """
    if jet.d % 2 == 0:
        raise WrongBranchError("Even dimension; use extension_coeffs_even", operation="extension_coeffs", d=jet.d)
    _check_J(jet, J, "extension_coeffs")
    N = jet.N
    lams = jet.exponents.prefix(N)
    coeffs: list[complex] = []
    last_terms: list[float] = []
    for j in range(J + 1):
        lam = lams[j]
        qp = complex(1.0)
        for s in range(j):
            qp *= lam - lams[s]
        acc = jet.derivs[j] / qp
        for n in range(j + 1, N + 1):
            qp *= lam - lams[n]
            acc += jet.derivs[n] / qp
        scale = np.exp(-lam * jet.v0)
        coeffs.append(complex(scale * acc))
        last_terms.append(float(abs(scale * jet.derivs[N] / qp)))

    series = ExtensionSeries(
        k=jet.k,
        l=jet.l,
        d=jet.d,
        coeffs=tuple(coeffs),
        exponents=tuple(lams[: J + 1]),
        trunc_error=_tail_bound(last_terms, jet.v0, jet.tau),
        v0=jet.v0,
        tau=jet.tau,
    )
    logger.debug("extension_coeffs(k=%d, l=%d): tail %g", jet.k, jet.l, series.trunc_error)
    return _check_truncation(series, tail_tol, "extension_coeffs")


def _residue_bound(n: int) -> float:
    return 2.0**n / math.factorial(n - 2)


def extension_coeffs_even(jet: LogCoefficientJet, J: int, *, tail_tol: float | None = None) -> ExtensionSeries:
    """Even-d coefficients from partial fractions of 1/q_n with double roots.

    Each 1/q_n contributes (simple + double * w) e^(nu w) per distinct root nu, w = v - v0.
    Rewriting in v, the plain part of root nu is e^(-nu v0)(A - v0 B) and the log part
    e^(-nu v0) B, where A and B accumulate D^(n) f~(v0) times the simple and double residues.
    An odd position whose value repeats an even one carries the log part.
    """
    if jet.d % 2 == 1:
        raise WrongBranchError("Odd dimension; use extension_coeffs", operation="extension_coeffs_even", d=jet.d)
    _check_J(jet, J, "extension_coeffs_even")
    N = jet.N
    lams = jet.exponents.prefix(N)
    plain: dict[complex, complex] = {}
    logs: dict[complex, complex] = {}
    last: dict[complex, float] = {}
    for n in range(N + 1):
        try:
            terms = partial_fractions(lams[: n + 1])
        except InvalidInputError as e:
            raise InvariantViolation(
                f"Symbol q_{n} has a root of multiplicity above 2", operation="extension_coeffs_even", n=n
            ) from e
        for term in terms:
            if n >= 2:
                bound = _residue_bound(n) * (1 + 1e-9)
                if abs(term.simple) > bound or abs(term.double) > bound:
                    raise InvariantViolation(
                        f"Residue coefficient exceeds 2^n/(n-2)! at n={n}",
                        operation="extension_coeffs_even",
                        root=term.root,
                    )
            dn = jet.derivs[n]
            plain[term.root] = plain.get(term.root, 0j) + dn * term.simple
            logs[term.root] = logs.get(term.root, 0j) + dn * term.double
            if n == N:
                last[term.root] = abs(dn) * (abs(term.simple) + abs(term.double) * (1 + abs(jet.v0)))

    coeffs: list[complex] = []
    flags: list[bool] = []
    last_terms: list[float] = []
    for j in range(J + 1):
        nu = lams[j]
        scale = np.exp(-nu * jet.v0)
        flagged = odd_partner_index(jet.k, jet.d, j) is not None
        if flagged:
            value = scale * logs.get(nu, 0j)
        else:
            value = scale * (plain.get(nu, 0j) - jet.v0 * logs.get(nu, 0j))
        coeffs.append(complex(value))
        flags.append(flagged)
        last_terms.append(float(abs(scale) * last.get(nu, 0.0)))

    series = ExtensionSeries(
        k=jet.k,
        l=jet.l,
        d=jet.d,
        coeffs=tuple(coeffs),
        exponents=tuple(lams[: J + 1]),
        trunc_error=_tail_bound(last_terms, jet.v0, jet.tau),
        log_flags=tuple(flags),
        v0=jet.v0,
        tau=jet.tau,
    )
    logger.debug("extension_coeffs_even(k=%d, l=%d): tail %g", jet.k, jet.l, series.trunc_error)
    return _check_truncation(series, tail_tol, "extension_coeffs_even")


def coefficients_for(jet: LogCoefficientJet, J: int, *, tail_tol: float | None = None) -> ExtensionSeries:
    """Dispatch on the parity of d."""
    if jet.d % 2:
        return extension_coeffs(jet, J, tail_tol=tail_tol)
    return extension_coeffs_even(jet, J, tail_tol=tail_tol)


def _power(z: np.ndarray, lam: complex) -> np.ndarray:
    if lam.imag == 0 and float(lam.real).is_integer():
        return z ** int(lam.real)
    return np.power(z, lam)


def eval_Fkl(series: ExtensionSeries, z: complex | np.ndarray) -> complex | np.ndarray:
    """sum_j a_j z^lambda_j, with a principal log z factor on flagged terms."""
    zs = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(zs == 0):
        raise DomainError("F_{k,l} is not defined at z = 0", constraint="zero", operation="eval_Fkl")
    has_logs = any(series.log_flags)
    if has_logs and np.any((zs.real <= 0) & (np.abs(zs.imag) <= CUT_TOL)):
        raise DomainError("z lies on the cut (-inf, 0]", constraint="cut", operation="eval_Fkl")
    radius = series.guaranteed_radius()
    if np.any(np.abs(zs) >= radius):
        logger.warning("eval_Fkl: |z| beyond the guaranteed radius %g", radius)

    log_z = np.log(zs) if has_logs else None
    total = np.zeros_like(zs)
    for a, lam, flag in zip(series.coeffs, series.exponents, series.log_flags):
        if a == 0:
            continue
        term = a * _power(zs, lam)
        total += term * log_z if flag else term
    if np.ndim(z) == 0:
        return complex(total[0])
    return total


@dataclass(frozen=True)
class LaurentSplit:
    """f_{k,l}(z) = z^k f1(z^2) + z^(-k-d+2) f2(z^2).

    ``f2_log`` holds the even-d log-flagged coefficients, multiplied by log z.
    """

    k: int
    d: int
    f1: tuple[complex, ...]
    f2: tuple[complex, ...]
    f2_log: tuple[complex, ...] = field(default=())
    radius1: float = math.inf
    radius2: float = math.inf
    guaranteed: float = math.inf

    @property
    def meets_guarantee(self) -> bool:
        """Both radii reach 1/(2 tau) up to a 5% slack."""
        if math.isinf(self.guaranteed):
            return math.isinf(self.radius1) and math.isinf(self.radius2)
        floor = self.guaranteed * 0.95
        return self.radius1 >= floor and self.radius2 >= floor

    def evaluate(self, z: complex) -> complex:
        """Reassemble f_{k,l}(z) from the two parts."""
        z = complex(z)
        w = z * z
        part1 = sum(c * w**j for j, c in enumerate(self.f1))
        part2 = sum(c * w**j for j, c in enumerate(self.f2))
        if any(self.f2_log):
            part2 += np.log(z) * sum(c * w**j for j, c in enumerate(self.f2_log))
        return complex(z**self.k * part1 + z ** (-self.k - self.d + 2) * part2)


def part_radius(coeffs: tuple[complex, ...]) -> float:
    """Radius in z of sum_j c_j z^(2j) from the root test on |c_j|^(1/2j)."""
    mags = np.abs(np.asarray(coeffs, dtype=complex))
    if mags.size < 2:
        return math.inf
    peak = float(np.max(mags)) if mags.size else 0.0
    orders = 2 * np.arange(1, mags.size)
    tail = mags[1:]
    with np.errstate(divide="ignore"):
        logs = np.where(tail > NOISE_FLOOR * max(peak, 1.0), np.log(tail), -np.inf)
    estimate = root_test(logs, orders)
    return math.inf if estimate == 0.0 else 1.0 / estimate


def laurent_split(series: ExtensionSeries) -> LaurentSplit:
    """Split a_{k,l,j} by the parity of j and report root-test radii of both parts."""
    odd = series.coeffs_odd
    flags = series.even_d_log_flags
    f2 = tuple(0j if flag else c for c, flag in zip(odd, flags))
    f2_log = tuple(c if flag else 0j for c, flag in zip(odd, flags))
    combined = tuple(a + b for a, b in zip(f2, f2_log))
    return LaurentSplit(
        k=series.k,
        d=series.d,
        f1=series.coeffs_even,
        f2=f2,
        f2_log=f2_log,
        radius1=part_radius(series.coeffs_even),
        radius2=part_radius(combined),
        guaranteed=series.guaranteed_radius(),
    )


def growth_envelope(series: ExtensionSeries) -> float | None:
    """Slope of the least-squares fit of log|a_{2j}| against j, or None with fewer than 3 nonzero terms."""
    mags = np.abs(np.asarray(series.coeffs_even, dtype=complex))
    peak = float(np.max(mags)) if mags.size else 0.0
    keep = mags > NOISE_FLOOR * max(peak, 1.0)
    if np.count_nonzero(keep) < 3:
        return None
    js = np.arange(mags.size)[keep]
    return float(np.polyfit(js, np.log(mags[keep]), 1)[0])


def envelope_limit(tau: float, slack: float = 0.5) -> float:
    """log((2(tau + eps))^2) + slack, the slope allowed for log|a_{2j}|."""
    rate = 2.0 * (tau + _eps_hat(tau))
    return 2.0 * math.log(rate) + slack


def dump_series(series: list[ExtensionSeries], path: Path | None = None) -> list[dict[str, Any]]:
    """Rows {k, l, j, re, im, log_flag} for every series; written as JSON when ``path`` is given."""
    rows = [row for s in series for row in s.to_rows()]
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(rows, f, indent=2)
    return rows


def load_series(source: Path | list[dict[str, Any]], d: int) -> list[ExtensionSeries]:
    """Rebuild series from dump rows. Tail bounds are not stored and come back as nan."""
    if isinstance(source, Path):
        with open(source) as f:
            rows = json.load(f)
    else:
        rows = source
    if not isinstance(rows, list):
        raise InvalidInputError("Series dump must be a JSON array", operation="load_series")

    grouped: dict[tuple[int, int], dict[int, tuple[complex, bool]]] = {}
    try:
        for row in rows:
            index = (int(row["k"]), int(row["l"]))
            grouped.setdefault(index, {})[int(row["j"])] = (
                complex(float(row["re"]), float(row["im"])),
                bool(row.get("log_flag", False)),
            )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInputError(f"Malformed series row: {e}", operation="load_series") from e

    result = []
    for (k, l), entries in sorted(grouped.items()):
        J = max(entries)
        if sorted(entries) != list(range(J + 1)):
            raise InvalidInputError(f"Series ({k}, {l}) has gaps in j", operation="load_series")
        lams = exponent_sequence_for(k, d).prefix(J)
        result.append(
            ExtensionSeries(
                k=k,
                l=l,
                d=d,
                coeffs=tuple(entries[j][0] for j in range(J + 1)),
                exponents=tuple(lams),
                trunc_error=math.nan,
                log_flags=tuple(entries[j][1] for j in range(J + 1)),
            )
        )
    return result
