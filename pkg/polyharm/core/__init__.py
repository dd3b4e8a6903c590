"""Operator core: exponent sequences, fundamental functions and generalized Taylor series."""

from polyharm.core.errors import (
    CapabilityError,
    ConfigurationError,
    DomainError,
    InvalidInputError,
    InvariantViolation,
    PolyharmError,
    PreconditionError,
    SearchFailure,
    TruncationError,
    WrongBranchError,
)
from polyharm.core.exponents import ExponentSequence, SequenceKind, multiplicity_table
from polyharm.core.fundamental import (
    BoundMode,
    ClosedForm,
    FundamentalFunction,
    LinearGrowth,
    Strategy,
    bound_fundamental,
    check_recursion,
    eval_fundamental,
    fundamental_table,
    fundamental_taylor_coeffs,
)
from polyharm.core.handles import (
    ExpPolyHandle,
    ExpPolyTerm,
    FunctionHandle,
    FundamentalHandle,
    PowerSumHandle,
)
from polyharm.core.partial_fractions import ResidueTerm, partial_fractions
from polyharm.core.taylor import (
    GeneralizedTaylorSeries,
    convergence_radius,
    factorial_root_sequence,
    generalized_derivative,
    taylor_expand,
    taylor_remainder,
)

__all__ = [
    "BoundMode",
    "CapabilityError",
    "ClosedForm",
    "ConfigurationError",
    "DomainError",
    "ExpPolyHandle",
    "ExpPolyTerm",
    "ExponentSequence",
    "FunctionHandle",
    "FundamentalFunction",
    "FundamentalHandle",
    "GeneralizedTaylorSeries",
    "InvalidInputError",
    "InvariantViolation",
    "LinearGrowth",
    "PolyharmError",
    "PowerSumHandle",
    "PreconditionError",
    "ResidueTerm",
    "SearchFailure",
    "SequenceKind",
    "Strategy",
    "TruncationError",
    "WrongBranchError",
    "bound_fundamental",
    "check_recursion",
    "convergence_radius",
    "eval_fundamental",
    "factorial_root_sequence",
    "fundamental_table",
    "fundamental_taylor_coeffs",
    "generalized_derivative",
    "multiplicity_table",
    "partial_fractions",
    "taylor_expand",
    "taylor_remainder",
]
