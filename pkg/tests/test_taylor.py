"""Tests for generalized Taylor expansions."""

from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from polyharm.core import (
    ExponentSequence,
    ExpPolyHandle,
    InvalidInputError,
    convergence_radius,
    factorial_root_sequence,
    generalized_derivative,
    taylor_expand,
    taylor_remainder,
)
from polyharm.core.taylor import radius_from_rstar, radius_from_sigma


@pytest.fixture
def log_two_series():
    """f = 1 expanded along lambda_n = n + 1 at x0 = 0."""
    return taylor_expand(ExpPolyHandle.constant(1.0), ExponentSequence.arithmetic(1, 1), 0.0, 40)


class TestLogTwoExample:
    """The constant function along lambda_n = n + 1."""

    def test_integer_coefficients(self, log_two_series) -> None:
        """a_n = (-1)^n n! exactly for n <= 12."""
        for n in range(13):
            assert log_two_series.coeffs[n] == (-1) ** n * math.factorial(n)

    def test_radius(self, log_two_series) -> None:
        """Radius ln 2 from R* = 1 and beta = 1."""
        assert log_two_series.R_star == pytest.approx(1.0, rel=1e-12)
        assert log_two_series.radius == pytest.approx(math.log(2.0), rel=0.02)

    def test_partial_sum_inside(self, log_two_series) -> None:
        assert abs(log_two_series.partial_sum(0.5) - 1.0) <= 1e-6

    def test_terms_grow_outside(self, log_two_series) -> None:
        """Beyond ln 2 the term magnitudes do not decay."""
        mags = np.abs(log_two_series.terms(0.8))[20:]
        assert np.all(mags[1:] >= mags[:-1])

    def test_to_dict(self, log_two_series) -> None:
        data = log_two_series.to_dict()
        assert data["x0"] == 0.0
        assert len(data["coeffs"]) == 41
        assert data["exponents"]["kind"] == "linear-growth-rule"


class TestGeneralizedDerivative:
    """Tests for D^(n) f."""

    def test_annihilates_exponential(self) -> None:
        """(d/dx - 2) e^(2x) = 0."""
        f = ExpPolyHandle.exponential(2.0)
        assert abs(generalized_derivative(f, [2.0], 1, 0.7)) < 1e-14

    def test_zero_order_is_value(self) -> None:
        f = ExpPolyHandle.polynomial([1.0, 1.0])
        assert generalized_derivative(f, [5.0], 0, 2.0) == 3.0

    def test_classical_derivatives(self) -> None:
        """With all exponents zero D^(n) is the n-th derivative."""
        f = ExpPolyHandle.polynomial([0, 0, 0, 1])
        assert_allclose(generalized_derivative(f, ExponentSequence.constant(0.0), 2, 2.0), 12.0)

    def test_negative_order_rejected(self) -> None:
        with pytest.raises(InvalidInputError):
            generalized_derivative(ExpPolyHandle.constant(1.0), [0.0], -1, 0.0)

    def test_short_exponent_list_rejected(self) -> None:
        with pytest.raises(InvalidInputError):
            generalized_derivative(ExpPolyHandle.constant(1.0), [0.0], 3, 0.0)


class TestRemainder:
    """Tests for the integral remainder R_m."""

    @pytest.mark.parametrize("m", [0, 2, 5])
    def test_identity_for_exp(self, m: int) -> None:
        """f(x) = s_m(x) + R_m(x) along alternating exponents."""
        exps = ExponentSequence.bounded(lambda n: complex(0.5 * (-1) ** n), bound=0.5)
        f = ExpPolyHandle.exponential(1.0)
        s_m = taylor_expand(f, exps, 0.0, m).partial_sum(1.0)
        r_m = taylor_remainder(f, exps, 0.0, m, 1.0)
        assert abs(f(1.0) - s_m - r_m) <= 1e-8

    def test_identity_for_harmonic_section(self, harmonic3) -> None:
        exps = ExponentSequence.explicit([0.3, -0.2, 0.5, 1.0, -0.7])
        f = harmonic3.radial_section([0.3, 0.4, 0.5])
        s_m = taylor_expand(f, exps, 1.0, 3).partial_sum(1.4)
        r_m = taylor_remainder(f, exps, 1.0, 3, 1.4)
        assert abs(f(1.4) - s_m - r_m) <= 1e-8

    def test_zero_length(self) -> None:
        f = ExpPolyHandle.exponential(1.0)
        assert taylor_remainder(f, ExponentSequence.constant(0.0), 0.5, 2, 0.5) == 0

    def test_backwards_rejected(self) -> None:
        f = ExpPolyHandle.exponential(1.0)
        with pytest.raises(InvalidInputError):
            taylor_remainder(f, ExponentSequence.constant(0.0), 1.0, 2, 0.5)


class TestRadius:
    """Tests for convergence radius analytics."""

    def test_too_few_coefficients(self) -> None:
        with pytest.raises(InvalidInputError):
            convergence_radius([1.0] * 5, 0.0)

    def test_geometric_coefficients(self) -> None:
        """|a_n / n!| = 2^-n gives R* = 2."""
        coeffs = [math.factorial(n) * 0.5**n for n in range(30)]
        assert convergence_radius(coeffs, 0.0) == pytest.approx(2.0, rel=1e-9)

    def test_factorial_decay_is_entire(self) -> None:
        """a_n = 1 means |a_n / n!| decays factorially."""
        assert convergence_radius([1.0] * 30, 0.0) == math.inf

    def test_all_zero_is_entire(self) -> None:
        assert convergence_radius([1.0] + [0.0] * 20, 0.0) == math.inf

    def test_short_zero_list_is_entire(self) -> None:
        """Identically zero coefficients need no minimum count."""
        assert convergence_radius([0.0] * 3, 0.0) == math.inf
        assert convergence_radius([0j] * 11, 1.0) == math.inf

    def test_linear_growth_transform(self) -> None:
        assert radius_from_rstar(1.0, 1.0) == pytest.approx(math.log(2.0))
        assert radius_from_rstar(3.0, 0.0) == 3.0
        assert radius_from_rstar(math.inf, 1.0) == math.inf

    def test_sigma_radius(self) -> None:
        assert radius_from_sigma(0.5, 0.0) == 2.0
        assert radius_from_sigma(1.0, 1.0) == pytest.approx(math.log(2.0))
        assert radius_from_sigma(0.0, 1.0) == math.inf


class TestFactorialRoot:
    """Tests for (n! Phi_Lambda_n(x))^(1/n)."""

    def test_zero_exponents(self) -> None:
        """Phi_n(x) = x^n / n! so every root equals x."""
        roots = factorial_root_sequence([0.0] * 61, 0.7)
        assert roots.shape == (60,)
        assert_allclose(roots, 0.7, rtol=1e-10)

    def test_consecutive_integers(self) -> None:
        """lambda_n = n gives Phi_n(x) = (e^x - 1)^n / n!."""
        roots = factorial_root_sequence([float(n) for n in range(61)], 0.5)
        assert_allclose(roots, math.expm1(0.5), rtol=1e-8)
