"""Lie-norm geometry of C^d."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from polyharm.spherical.basis import harmonic_basis, surface_area

CLAMP_TOL = 1e-14
CUT_TOL = 1e-12


@dataclass(frozen=True)
class LiePoint:
    """A point z of C^d with q(z), |z|^2 and the Lie norms L+ >= L-."""

    z: tuple[complex, ...]
    q: complex
    norm_sq: float
    L_plus: float
    L_minus: float

    @property
    def d(self) -> int:
        return len(self.z)

    @property
    def on_cut(self) -> bool:
        """q(z) lies on (-inf, 0]."""
        return self.q.real <= 0 and abs(self.q.imag) <= CUT_TOL


def lie_point(z) -> LiePoint:
    """Compute q(z), |z|^2 and L+- = sqrt(|z|^2 +- sqrt(|z|^4 - |q|^2))."""
    vec = np.asarray(z, dtype=complex).ravel()
    q = complex(np.sum(vec * vec))
    norm_sq = float(np.sum(np.abs(vec) ** 2))
    # |z|^4 >= |q|^2 in exact arithmetic; negatives are rounding of order CLAMP_TOL
    inner = max(norm_sq**2 - abs(q) ** 2, 0.0)
    L_plus = math.sqrt(norm_sq + math.sqrt(inner))
    L_minus = abs(q) / L_plus if L_plus > 0 else 0.0
    return LiePoint(
        z=tuple(complex(c) for c in vec),
        q=q,
        norm_sq=norm_sq,
        L_plus=L_plus,
        L_minus=min(L_minus, L_plus),
    )


def lie_annulus_contains(p: LiePoint, r0: float, r1: float, exclude_cut: bool = True) -> bool:
    """r0 < L-(z) and L+(z) < r1, optionally away from q(z) in (-inf, 0]."""
    if not (r0 < p.L_minus and p.L_plus < r1):
        return False
    return not (exclude_cut and p.on_cut)


def violated_constraint(p: LiePoint, r0: float, r1: float, exclude_cut: bool = True) -> str | None:
    """Name of the first violated Lie-annulus constraint, or None."""
    if not r0 < p.L_minus:
        return "L-"
    if not p.L_plus < r1:
        return "L+"
    if exclude_cut and p.on_cut:
        return "cut"
    return None


def harmonic_addition_bound(z, k: int) -> tuple[float, float]:
    """(sum_l |Y_{k,l}(z)|^2, a_k / omega_{d-1} * L+(z)^(2k))."""
    vec = np.asarray(z, dtype=complex).ravel()
    d = vec.size
    basis = harmonic_basis(d, k)
    lhs = float(np.sum(np.abs(basis.evaluate_all(vec[None, :])) ** 2))
    rhs = basis.a_k / surface_area(d) * lie_point(vec).L_plus ** (2 * k)
    return lhs, rhs
