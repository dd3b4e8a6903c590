"""Analytic continuation of annular models through their Fourier-Laplace coefficients."""

from polyharm.extension.assemble import (
    Membership,
    ModelExtension,
    default_v0,
    eval_extension,
    outer_radius,
)
from polyharm.extension.coefficients import (
    ExtensionSeries,
    LaurentSplit,
    coefficients_for,
    dump_series,
    envelope_limit,
    eval_Fkl,
    extension_coeffs,
    extension_coeffs_even,
    growth_envelope,
    laurent_split,
    load_series,
    part_radius,
)
from polyharm.extension.jet import (
    LogCoefficientJet,
    SeriesValue,
    jets_for_model,
    log_derivatives,
    log_jet,
    taylor_in_log,
)

__all__ = [
    "ExtensionSeries",
    "LaurentSplit",
    "LogCoefficientJet",
    "Membership",
    "ModelExtension",
    "SeriesValue",
    "coefficients_for",
    "default_v0",
    "dump_series",
    "envelope_limit",
    "eval_Fkl",
    "eval_extension",
    "extension_coeffs",
    "extension_coeffs_even",
    "growth_envelope",
    "jets_for_model",
    "laurent_split",
    "load_series",
    "log_derivatives",
    "log_jet",
    "outer_radius",
    "part_radius",
    "taylor_in_log",
]
