"""Tests for the even-dimension extension with logarithmic terms."""

from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from polyharm.core import DomainError, WrongBranchError
from polyharm.extension import (
    ModelExtension,
    coefficients_for,
    eval_Fkl,
    extension_coeffs,
    extension_coeffs_even,
    laurent_split,
    log_jet,
)
from polyharm.verify.checks import harmonic_continuation


def expected_pairs(m) -> dict[tuple[int, int], tuple[float, float]]:
    """(a_0, a_1) per (k, l); the log term lands on (0, 1) as (0, log_beta)."""
    pairs = {(t.k, t.l): (t.alpha, t.beta) for t in m.terms}
    pairs[(0, 1)] = (0.0, m.log_beta)
    return pairs


class TestEvenCoefficients:
    """Tests for extension_coeffs_even."""

    def test_harmonic_recovery(self, harmonic2) -> None:
        for (k, l), (alpha, beta) in expected_pairs(harmonic2).items():
            series = extension_coeffs_even(log_jet(harmonic2, k, l, 0.0, 40), 20)
            assert abs(series.coeffs[0] - alpha) < 1e-6
            assert abs(series.coeffs[1] - beta) < 1e-6
            assert max(abs(c) for c in series.coeffs[2:]) < 1e-6

    def test_log_flags(self, harmonic2) -> None:
        """Odd positions repeating an even exponent carry log z."""
        flags = extension_coeffs_even(log_jet(harmonic2, 0, 1, 0.0, 12), 6).log_flags
        assert flags == (False, True, False, True, False, True, False)
        flags = extension_coeffs_even(log_jet(harmonic2, 1, 1, 0.0, 12), 6).log_flags
        assert flags == (False, False, False, True, False, True, False)

    def test_dispatch(self, harmonic2) -> None:
        jet = log_jet(harmonic2, 1, 1, 0.0, 12)
        assert coefficients_for(jet, 6).coeffs == extension_coeffs_even(jet, 6).coeffs
        with pytest.raises(WrongBranchError):
            extension_coeffs(jet, 6)

    def test_v0_independence(self, harmonic2) -> None:
        first = extension_coeffs_even(log_jet(harmonic2, 0, 1, -0.2, 40), 12)
        second = extension_coeffs_even(log_jet(harmonic2, 0, 1, 0.3, 40), 12)
        assert_allclose(first.coeffs, second.coeffs, atol=1e-7)

    def test_log_coefficient_value(self, harmonic2) -> None:
        """F_{0,1}(r) = log_beta log r on the positive axis."""
        series = extension_coeffs_even(log_jet(harmonic2, 0, 1, 0.0, 40), 20)
        for r in (0.6, 1.4):
            assert_allclose(eval_Fkl(series, r), 0.7 * math.log(r), atol=1e-6)

    def test_cut_rejected_with_logs(self, harmonic2) -> None:
        series = extension_coeffs_even(log_jet(harmonic2, 0, 1, 0.0, 12), 6)
        with pytest.raises(DomainError) as info:
            eval_Fkl(series, -1.0)
        assert info.value.constraint == "cut"

    def test_laurent_split_log_part(self, harmonic2) -> None:
        series = extension_coeffs_even(log_jet(harmonic2, 0, 1, 0.0, 40), 20)
        split = laurent_split(series)
        assert split.f2[0] == 0
        assert abs(split.f2_log[0] - 0.7) < 1e-6
        z = 1.1 + 0.3j
        assert_allclose(split.evaluate(z), eval_Fkl(series, z), rtol=1e-10, atol=1e-12)


class TestEvenExtension:
    """Tests for F(z) in the plane."""

    @pytest.fixture
    def extension2(self, harmonic2) -> ModelExtension:
        return ModelExtension.build(harmonic2, K_max=4, J=20, N=40)

    def test_restriction(self, extension2, harmonic2, rng) -> None:
        phi = rng.uniform(0, 2 * np.pi, size=15)
        r = rng.uniform(0.55, 1.9, size=15)
        points = np.stack([r * np.cos(phi), r * np.sin(phi)], axis=-1)
        assert_allclose(extension2.evaluate_many(points), harmonic2(points), atol=1e-6)

    def test_closed_form_continuation(self, extension2, harmonic2) -> None:
        z = np.array([0.9 + 0.1j, -0.4 + 0.05j])
        assert extension2.membership(z).inside
        assert_allclose(extension2.evaluate(z), harmonic_continuation(harmonic2, z), atol=1e-6)
