"""Differentiable function handles with exact derivatives."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from polyharm.core.errors import CapabilityError, DomainError
from polyharm.core.fundamental import fundamental_table


class FunctionHandle(ABC):
    """A scalar function of one real variable exposing exact derivatives."""

    name: str = "function"
    max_order: int | None = None

    @abstractmethod
    def _derivatives(self, x: float, order: int) -> np.ndarray:
        """Return f(x), f'(x), ..., f^(order)(x)."""
        ...

    def derivatives(self, x: float, order: int) -> np.ndarray:
        """Return f(x), f'(x), ..., f^(order)(x) as a complex array."""
        if self.max_order is not None and order > self.max_order:
            raise CapabilityError(
                f"{self.name} exposes derivatives up to order {self.max_order}, not {order}",
                operation="derivatives",
            )
        return np.asarray(self._derivatives(float(x), order), dtype=complex)

    def __call__(self, x: float) -> complex:
        return complex(self.derivatives(x, 0)[0])


@dataclass(frozen=True)
class ExpPolyTerm:
    """coef * x**power * exp(rate * x)."""

    coef: complex
    power: int = 0
    rate: complex = 0j


class ExpPolyHandle(FunctionHandle):
    """Finite sum of terms c * x^s * exp(mu x), optionally taking the real part."""

    name = "exp-poly"

    def __init__(self, terms: Sequence[ExpPolyTerm], real: bool = False) -> None:
        self.terms = tuple(terms)
        self.real = real

    @classmethod
    def constant(cls, c: complex) -> ExpPolyHandle:
        return cls([ExpPolyTerm(coef=c)])

    @classmethod
    def exponential(cls, rate: complex, coef: complex = 1.0) -> ExpPolyHandle:
        return cls([ExpPolyTerm(coef=coef, rate=rate)])

    @classmethod
    def polynomial(cls, coeffs: Sequence[complex]) -> ExpPolyHandle:
        """sum coeffs[s] * x**s."""
        return cls([ExpPolyTerm(coef=c, power=s) for s, c in enumerate(coeffs) if c != 0])

    @classmethod
    def damped_sine(cls, omega: float, rate: float = 0.0) -> ExpPolyHandle:
        """sin(omega x) * exp(rate x) as the real part of -i exp((rate + i omega) x)."""
        return cls([ExpPolyTerm(coef=-1j, rate=complex(rate, omega))], real=True)

    def _derivatives(self, x: float, order: int) -> np.ndarray:
        out = np.zeros(order + 1, dtype=complex)
        for term in self.terms:
            growth = np.exp(term.rate * x)
            for j in range(order + 1):
                acc = 0j
                for i in range(min(j, term.power) + 1):
                    falling = math.perm(term.power, i)
                    acc += math.comb(j, i) * falling * x ** (term.power - i) * term.rate ** (j - i)
                out[j] += term.coef * acc * growth
        if self.real:
            out = out.real.astype(complex)
        return out


class PowerSumHandle(FunctionHandle):
    """sum c * x**mu plus log_coef * log x, defined for x > 0."""

    name = "power-sum"

    def __init__(self, terms: Sequence[tuple[complex, float]], log_coef: complex = 0.0) -> None:
        self.terms = tuple((complex(c), float(mu)) for c, mu in terms)
        self.log_coef = complex(log_coef)

    def _derivatives(self, x: float, order: int) -> np.ndarray:
        if x <= 0:
            raise DomainError(f"power sums need x > 0, got {x}", constraint="x>0")
        out = np.zeros(order + 1, dtype=complex)
        for c, mu in self.terms:
            falling = 1.0
            for j in range(order + 1):
                out[j] += c * falling * x ** (mu - j)
                falling *= mu - j
        if self.log_coef != 0:
            out[0] += self.log_coef * math.log(x)
            for j in range(1, order + 1):
                out[j] += self.log_coef * (-1) ** (j - 1) * math.factorial(j - 1) / x**j
        return out


class FundamentalHandle(FunctionHandle):
    """Phi_Lambda_n as a handle; derivatives use Phi_i' = lambda_i Phi_i + Phi_{i-1}."""

    name = "fundamental"

    def __init__(self, lambda_prefix: Sequence[complex]) -> None:
        self.exponents = tuple(complex(v) for v in lambda_prefix)

    def _derivatives(self, x: float, order: int) -> np.ndarray:
        lams = np.asarray(self.exponents)
        level = fundamental_table(lams, x)
        out = [complex(level[-1])]
        for _ in range(order):
            shifted = np.concatenate(([0j], level[:-1]))
            level = lams * level + shifted
            out.append(complex(level[-1]))
        return np.asarray(out)
