"""Partial fractions of 1/q for symbols with roots of multiplicity at most two."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from polyharm.core.errors import InvalidInputError
from polyharm.core.exponents import multiplicity_table


@dataclass(frozen=True)
class ResidueTerm:
    """Contribution of one distinct root to 1/q(z).

    ``simple`` is the coefficient of 1/(z - root); ``double`` the coefficient of
    1/(z - root)^2 and is zero for simple roots. In the time domain the term is
    (simple + double * w) * exp(root * w).
    """

    root: complex
    multiplicity: int
    simple: complex
    double: complex = 0j

    def evaluate(self, w: np.ndarray | complex) -> np.ndarray | complex:
        """Value of (simple + double * w) * exp(root * w)."""
        return (self.simple + self.double * w) * np.exp(self.root * w)


def partial_fractions(roots: Sequence[complex], tol: float = 1e-9) -> list[ResidueTerm]:
    """Decompose 1/prod(z - roots) into residue terms.

    Simple root mu: a = 1/P(mu) with P the product over the other factors.
    Double root nu with P(z) = q(z)/(z - nu)^2: c = 1/P(nu) and
    b = -c * P'(nu)/P(nu), where P'/P = sum of m_rho/(nu - rho).
    """
    if len(roots) == 0:
        raise InvalidInputError("Empty root list", operation="partial_fractions")
    table = multiplicity_table(roots, tol=tol)
    if max(table.values()) > 2:
        raise InvalidInputError(
            "Roots of multiplicity above 2 are not supported",
            operation="partial_fractions",
            multiplicities={str(k): v for k, v in table.items()},
        )

    terms = []
    for root, mult in table.items():
        others = [(rho, m) for rho, m in table.items() if rho != root]
        p_value = complex(1.0)
        for rho, m in others:
            p_value *= (root - rho) ** m
        if mult == 1:
            terms.append(ResidueTerm(root=root, multiplicity=1, simple=1.0 / p_value))
        else:
            c = 1.0 / p_value
            log_derivative = sum(m / (root - rho) for rho, m in others)
            terms.append(ResidueTerm(root=root, multiplicity=2, simple=-c * log_derivative, double=c))
    return terms
