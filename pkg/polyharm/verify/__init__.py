"""Numeric witnesses and the acceptance checks behind ``polyharm verify``."""

from polyharm.verify.base import (
    Check,
    CheckRegistry,
    VerificationRun,
    WitnessReport,
    run_checks,
)
from polyharm.verify.checks import get_default_checks
from polyharm.verify.witnesses import (
    DerivativeSource,
    HandleSource,
    ModelJetSource,
    check_even_to_odd,
    check_factorial_root_limit,
    check_odd_derivative_bound,
    lemma_sides,
    mean_value_point,
    mean_value_target,
    rolle_point,
)

__all__ = [
    "Check",
    "CheckRegistry",
    "DerivativeSource",
    "HandleSource",
    "ModelJetSource",
    "VerificationRun",
    "WitnessReport",
    "check_even_to_odd",
    "check_factorial_root_limit",
    "check_odd_derivative_bound",
    "get_default_checks",
    "lemma_sides",
    "mean_value_point",
    "mean_value_target",
    "rolle_point",
    "run_checks",
]
