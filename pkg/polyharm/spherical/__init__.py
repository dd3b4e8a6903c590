"""Spherical harmonics, Fourier-Laplace coefficients and Lie-norm geometry."""

from polyharm.spherical.basis import (
    HarmonicBasis,
    basis_count,
    harmonic_basis,
    harmonic_indices,
    surface_area,
)
from polyharm.spherical.lie import (
    LiePoint,
    harmonic_addition_bound,
    lie_annulus_contains,
    lie_point,
    violated_constraint,
)
from polyharm.spherical.quadrature import SphereQuadrature, sphere_quadrature
from polyharm.spherical.radial import apply_Lk_power, exponent_sequence_for, odd_partner_index
from polyharm.spherical.transform import flc, flc_all, parseval_check, project

__all__ = [
    "HarmonicBasis",
    "LiePoint",
    "SphereQuadrature",
    "apply_Lk_power",
    "basis_count",
    "exponent_sequence_for",
    "flc",
    "flc_all",
    "harmonic_addition_bound",
    "harmonic_basis",
    "harmonic_indices",
    "lie_annulus_contains",
    "lie_point",
    "odd_partner_index",
    "parseval_check",
    "project",
    "sphere_quadrature",
    "surface_area",
    "violated_constraint",
]
