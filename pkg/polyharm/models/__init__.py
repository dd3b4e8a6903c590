"""Function families on annuli with closed-form Laplacian iterates."""

from __future__ import annotations

from pathlib import Path

from polyharm.models.base import AnnularModel
from polyharm.models.eigen import EigenModel
from polyharm.models.exponential import ExponentialModel
from polyharm.models.harmonic import HarmonicModel, HarmonicTerm
from polyharm.models.power import PowerModel, is_finite_order, power_coefficient
from polyharm.models.spec import ModelSpec, load_model_spec, to_complex
from polyharm.models.type_estimate import estimate_type

__all__ = [
    "AnnularModel",
    "EigenModel",
    "ExponentialModel",
    "HarmonicModel",
    "HarmonicTerm",
    "ModelSpec",
    "PowerModel",
    "build_model",
    "estimate_type",
    "is_finite_order",
    "load_model",
    "power_coefficient",
]


def build_model(spec: ModelSpec) -> AnnularModel:
    """Factory function to build a model from its validated file document."""
    params = spec.family_params()
    common = {"d": spec.d, "r0": spec.r0, "r1": spec.r1}

    if spec.family == "harmonic":
        terms = [HarmonicTerm(**t.model_dump()) for t in params.terms]
        return HarmonicModel(terms=terms, log_beta=params.log_beta, **common)
    if spec.family == "power":
        return PowerModel(alpha=params.alpha, k=params.k, l=params.l, **common)
    if spec.family == "exponential":
        return ExponentialModel(a=params.a, **common)
    if spec.family == "eigen":
        return EigenModel(
            lam=to_complex(params.lam),
            k=params.k,
            l=params.l,
            coef=to_complex(params.coef),
            **common,
        )

    raise ValueError(f"Unknown model family: {spec.family}. Available: harmonic, power, exponential, eigen")


def load_model(path: Path) -> AnnularModel:
    """Read and build a model file."""
    return build_model(load_model_spec(path))
