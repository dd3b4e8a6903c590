"""The radial operators L_k and the exponents they induce in the log variable."""

from __future__ import annotations

from polyharm.core.errors import InvalidInputError
from polyharm.core.exponents import ExponentSequence


def apply_Lk_power(mu: complex, k: int, d: int) -> tuple[complex, complex]:
    """L_k(r^mu) = [mu(mu - 1) + (d - 1) mu - k(k + d - 2)] r^(mu - 2).

    The coefficient factors as (mu - k)(mu + k + d - 2).
    """
    mu = complex(mu)
    coefficient = (mu - k) * (mu + k + d - 2)
    return coefficient, mu - 2


def exponent_sequence_for(k: int, d: int) -> ExponentSequence:
    """lambda_{2j} = k + 2j, lambda_{2j+1} = -k - d + 2 + 2j.

    For odd d the exponents are pairwise distinct; for even d the odd-position
    values k + 2j' with j' >= k + d/2 - 1 repeat earlier even-position ones, which
    ``multiplicity_table`` reports exactly.
    """
    if k < 0 or d < 2:
        raise InvalidInputError(f"Need k >= 0 and d >= 2, got k={k}, d={d}", operation="exponent_sequence_for")

    def rule(n: int) -> complex:
        if n % 2 == 0:
            return complex(k + n)
        return complex(-k - d + 1 + n)

    return ExponentSequence.linear(rule, alpha=float(k + d), beta=1.0, label=f"harmonic(k={k},d={d})")


def odd_partner_index(k: int, d: int, j: int) -> int | None:
    """Even position n with lambda_n equal to lambda_j for odd j, if any."""
    if j % 2 == 0 or d % 2 == 1:
        return None
    value = -k - d + 1 + j
    if value < k or (value - k) % 2:
        return None
    return value - k
