"""The complexified extension F(z) = f1(z) + q(z)^((2-d)/2) f2(z) of a model."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from polyharm.config.settings import get_settings
from polyharm.core.errors import DomainError, InvalidInputError
from polyharm.extension.coefficients import ExtensionSeries, coefficients_for
from polyharm.extension.jet import jets_for_model
from polyharm.models.base import AnnularModel
from polyharm.spherical.basis import harmonic_basis
from polyharm.spherical.lie import LiePoint, lie_point, violated_constraint

logger = logging.getLogger(__name__)


def outer_radius(r1: float, tau: float) -> float:
    """min(r1, 1/(2 tau)); r1 for type zero."""
    return r1 if tau <= 0 else min(r1, 1.0 / (2.0 * tau))


def default_v0(r0: float, r_outer: float) -> float:
    """Log-midpoint of (r0, r_outer), with r0 = 0 and r_outer = inf handled."""
    if r0 > 0 and math.isfinite(r_outer):
        return 0.5 * (math.log(r0) + math.log(r_outer))
    if r0 > 0:
        return math.log(2.0 * r0)
    if math.isfinite(r_outer):
        return math.log(r_outer / 2.0)
    return 0.0


@dataclass(frozen=True)
class Membership:
    """Lie-annulus membership of one point, as reported by the extend command."""

    L_minus: float
    L_plus: float
    on_cut: bool
    constraint: str | None

    @property
    def inside(self) -> bool:
        return self.constraint is None


@dataclass(frozen=True)
class ModelExtension:
    """All series a_{k,l,j} of a model for k <= K_max, ready for evaluation in C^d."""

    d: int
    r0: float
    r_outer: float
    tau: float
    K_max: int
    J: int
    N: int
    v0: float
    series: tuple[ExtensionSeries, ...]

    @classmethod
    def build(
        cls,
        m: AnnularModel,
        *,
        K_max: int | None = None,
        J: int | None = None,
        N: int | None = None,
        v0: float | None = None,
        degree: int | None = None,
        threads: int | None = None,
        tail_tol: float | None = None,
    ) -> ModelExtension:
        """Compute jets at v0 and the coefficients of every (k, l)."""
        settings = get_settings()
        K_max = settings.K_max if K_max is None else K_max
        J = settings.J if J is None else J
        N = settings.N if N is None else N
        threads = settings.threads if threads is None else threads
        if K_max < 0 or threads < 1:
            raise InvalidInputError("Need K_max >= 0 and threads >= 1", operation="eval_extension")
        if J > N:
            raise InvalidInputError(f"J = {J} exceeds N = {N}", operation="eval_extension")

        tau = m.tau_claimed
        r_outer = outer_radius(m.r1, tau)
        if r_outer <= m.r0:
            raise DomainError(
                f"Lie annulus is empty: r0 = {m.r0} >= min(r1, 1/(2 tau)) = {r_outer}",
                constraint="L+",
                operation="eval_extension",
            )
        v0 = default_v0(m.r0, r_outer) if v0 is None else float(v0)

        jets = jets_for_model(m, v0, N, K_max, degree=degree)
        ordered = [jets[index] for index in sorted(jets)]
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                series = list(pool.map(lambda jet: coefficients_for(jet, J, tail_tol=tail_tol), ordered))
        else:
            series = [coefficients_for(jet, J, tail_tol=tail_tol) for jet in ordered]
        logger.info(
            "Built extension: d=%d, K_max=%d, J=%d, N=%d, v0=%g, %d series",
            m.d,
            K_max,
            J,
            N,
            v0,
            len(series),
        )
        return cls(
            d=m.d,
            r0=m.r0,
            r_outer=r_outer,
            tau=tau,
            K_max=K_max,
            J=J,
            N=N,
            v0=v0,
            series=tuple(series),
        )

    @property
    def trunc_error(self) -> float:
        """Sum of the coefficient tail bounds."""
        return float(sum(s.trunc_error for s in self.series))

    def membership(self, z: Any) -> Membership:
        point = self._point(z)
        return Membership(
            L_minus=point.L_minus,
            L_plus=point.L_plus,
            on_cut=point.on_cut,
            constraint=violated_constraint(point, self.r0, self.r_outer, exclude_cut=True),
        )

    def _point(self, z: Any) -> LiePoint:
        vec = np.asarray(z, dtype=complex).ravel()
        if vec.size != self.d:
            raise InvalidInputError(f"Expected a point of C^{self.d}", operation="eval_extension")
        return lie_point(vec)

    def evaluate(self, z: Any) -> complex:
        """F(z); the sum runs over k then l in index order."""
        point = self._point(z)
        constraint = violated_constraint(point, self.r0, self.r_outer, exclude_cut=True)
        if constraint is not None:
            raise DomainError(
                f"z is outside the Lie annulus ({self.r0}, {self.r_outer}): {constraint} violated",
                constraint=constraint,
                operation="eval_extension",
                L_minus=point.L_minus,
                L_plus=point.L_plus,
            )
        vec = np.asarray(point.z, dtype=complex)[None, :]
        q = point.q
        half_log_q = 0.5 * np.log(q)
        f1 = 0j
        f2 = 0j
        for s in self.series:
            y = complex(harmonic_basis(self.d, s.k).evaluate(s.l, vec)[0])
            even = sum(a * q**j for j, a in enumerate(s.coeffs_even))
            odd = 0j
            for j, (a, flag) in enumerate(zip(s.coeffs_odd, s.even_d_log_flags)):
                term = a * q ** (j - s.k)
                odd += term * half_log_q if flag else term
            f1 += even * y
            f2 += odd * y
        return complex(f1 + np.power(q, (2 - self.d) / 2) * f2)

    def evaluate_many(self, points: Any, *, threads: int = 1, skip_outside: bool = False) -> np.ndarray:
        """F at each row of ``points``; nan outside the Lie annulus when ``skip_outside``."""
        pts = np.atleast_2d(np.asarray(points, dtype=complex))

        def one(z: np.ndarray) -> complex:
            if skip_outside and not self.membership(z).inside:
                return complex(math.nan, math.nan)
            return self.evaluate(z)

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                values = list(pool.map(one, pts))
        else:
            values = [one(z) for z in pts]
        return np.asarray(values, dtype=complex)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "d": self.d,
            "r0": self.r0,
            "r_outer": self.r_outer if math.isfinite(self.r_outer) else "inf",
            "tau": self.tau,
            "K_max": self.K_max,
            "J": self.J,
            "N": self.N,
            "v0": self.v0,
            "trunc_error": self.trunc_error,
        }


def eval_extension(
    m: AnnularModel,
    z: Any,
    K_max: int | None = None,
    J: int | None = None,
    *,
    N: int | None = None,
    v0: float | None = None,
    degree: int | None = None,
) -> complex:
    """One-shot F(z) for a model; build a ModelExtension to evaluate many points."""
    return ModelExtension.build(m, K_max=K_max, J=J, N=N, v0=v0, degree=degree).evaluate(z)
