"""Tests for fundamental functions Phi_Lambda_n."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from polyharm.core import (
    BoundMode,
    ClosedForm,
    ConfigurationError,
    FundamentalFunction,
    InvalidInputError,
    LinearGrowth,
    Strategy,
    TruncationError,
    bound_fundamental,
    check_recursion,
    eval_fundamental,
    fundamental_table,
    fundamental_taylor_coeffs,
)

real_exponent = st.floats(min_value=-4.0, max_value=4.0, allow_nan=False, allow_infinity=False)
prefixes = st.lists(real_exponent, min_size=1, max_size=13)


class TestTaylorCoefficients:
    """Tests for Phi^(k)(0)."""

    @given(prefixes)
    @settings(max_examples=60, deadline=None)
    def test_cauchy_data(self, lams: list[float]) -> None:
        """Phi^(k)(0) = 0 below n, 1 at n, and the exponent sum at n + 1."""
        n = len(lams) - 1
        coeffs = fundamental_taylor_coeffs(lams, n + 1)
        assert all(c == 0 for c in coeffs[:n])
        assert coeffs[n] == 1
        assert abs(coeffs[n + 1] - sum(lams)) <= 1e-12 * max(1.0, abs(sum(lams)))

    def test_K_below_n_rejected(self) -> None:
        with pytest.raises(InvalidInputError):
            fundamental_taylor_coeffs([0, 1, 2], 1)

    def test_empty_prefix_rejected(self) -> None:
        with pytest.raises(InvalidInputError):
            fundamental_taylor_coeffs([], 3)

    def test_single_exponent_is_exponential(self) -> None:
        """Phi for (lambda) is e^(lambda z), so Phi^(k)(0) = lambda^k."""
        assert_allclose(fundamental_taylor_coeffs([1.5], 5), [1.5**k for k in range(6)])


class TestClosedForms:
    """Tests for closed-form classification and values."""

    @pytest.mark.parametrize(
        ("lams", "kind"),
        [
            ([0, 0, 0], ClosedForm.POLYNOMIAL),
            ([0, 1, 2], ClosedForm.EQUIDISTANT),
            ([0, 1, 3], ClosedForm.DISTINCT),
            ([1, 1, 2, 3, 3], ClosedForm.REPEATED),
            ([1, 1, 1, 2], ClosedForm.NONE),
        ],
    )
    def test_classification(self, lams: list[int], kind: ClosedForm) -> None:
        assert FundamentalFunction.from_exponents(lams).closed_form == kind

    def test_polynomial_value(self) -> None:
        """All-zero prefix gives z^n / n!."""
        phi = FundamentalFunction.from_exponents([0, 0, 0, 0])
        assert_allclose(phi(1.3), 1.3**3 / 6, rtol=1e-13)
        assert_allclose(phi(1.3, Strategy.CLOSED_FORM), 1.3**3 / 6, rtol=1e-13)

    def test_two_distinct_exponents(self) -> None:
        """(e^(az) - e^(bz)) / (a - b) by every strategy."""
        a, b = 0.5, -1.0
        z = np.array([0.2, -0.7 + 0.4j, 1.5j])
        expected = (np.exp(a * z) - np.exp(b * z)) / (a - b)
        phi = FundamentalFunction.from_exponents([a, b])
        for strategy in Strategy:
            assert_allclose(eval_fundamental(phi, z, strategy), expected, rtol=1e-10, atol=1e-12)

    def test_repeated_roots_agree_with_series(self) -> None:
        phi = FundamentalFunction.from_exponents([1, 1, 2, 3, 3])
        z = np.array([0.5, -1.0 + 0.5j])
        assert_allclose(phi(z, "closed-form"), phi(z, "series"), rtol=1e-10, atol=1e-12)

    def test_no_closed_form_for_triple_root(self) -> None:
        phi = FundamentalFunction.from_exponents([1, 1, 1, 2])
        with pytest.raises(InvalidInputError):
            phi(0.5, Strategy.CLOSED_FORM)

    def test_extend_appends_exponent(self) -> None:
        phi = FundamentalFunction.from_exponents([0, 1]).extend(2)
        assert phi.n == 2
        assert phi.closed_form == ClosedForm.EQUIDISTANT

    def test_to_dict(self) -> None:
        data = FundamentalFunction.from_exponents([0, 0]).to_dict()
        assert data["closed_form"] == "polynomial"
        assert data["multiplicities"] == [{"root": [0.0, 0.0], "multiplicity": 2}]


class TestStrategies:
    """Tests for the series and contour evaluators."""

    def test_table_rows(self) -> None:
        """Row i of the table is Phi_Lambda_i."""
        lams = [0.5, -1.0, 2.0]
        z = np.array([0.3, 1.0 - 0.5j])
        table = fundamental_table(lams, z)
        assert table.shape == (3, 2)
        for i in range(3):
            phi = FundamentalFunction.from_exponents(lams[: i + 1])
            assert_allclose(table[i], phi(z, Strategy.CLOSED_FORM), rtol=1e-11, atol=1e-13)

    @given(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=6, unique=True),
        st.floats(min_value=0.0, max_value=1.5),
        st.floats(min_value=0.0, max_value=2 * math.pi),
    )
    @settings(max_examples=40, deadline=None)
    def test_series_matches_contour(self, lams: list[int], radius: float, angle: float) -> None:
        """Series and contour agree for distinct integer exponents."""
        z = radius * complex(math.cos(angle), math.sin(angle))
        phi = FundamentalFunction.from_exponents(lams)
        series = phi(z, Strategy.SERIES)
        contour = phi(z, Strategy.CONTOUR)
        assert abs(series - contour) <= 1e-9 * max(1.0, abs(series))

    def test_contour_radius_too_small(self) -> None:
        """A contour that does not enclose every exponent is a configuration error."""
        phi = FundamentalFunction.from_exponents([0.0, 2.0])
        with pytest.raises(ConfigurationError):
            eval_fundamental(phi, 0.5, Strategy.CONTOUR, contour_radius=1.0)

    def test_series_term_cap(self) -> None:
        """Hitting the term cap raises TruncationError with the achieved bound."""
        with pytest.raises(TruncationError) as info:
            fundamental_table([0.0, 1.0], 5.0, max_terms=2)
        assert info.value.achieved_bound > 0

    def test_recursion_residual(self) -> None:
        """Phi_{n+1}' = lambda_{n+1} Phi_{n+1} + Phi_n up to differencing error."""
        phi_n = FundamentalFunction.from_exponents([0.5, -1.0])
        phi_np1 = phi_n.extend(2.0)
        assert check_recursion(phi_np1, phi_n, 0.4 + 0.2j, 1e-5) < 1e-7

    def test_recursion_requires_extension(self) -> None:
        phi = FundamentalFunction.from_exponents([0.5, -1.0])
        with pytest.raises(InvalidInputError):
            check_recursion(phi, phi, 0.1, 1e-4)


class TestBounds:
    """Tests for majorants of |Phi|."""

    @given(prefixes, st.floats(min_value=0.01, max_value=2.0))
    @settings(max_examples=60, deadline=None)
    def test_max_bound_dominates(self, lams: list[float], abs_z: float) -> None:
        """|Phi(z)| <= |z|^n/n! e^(M |z|) on the circle |z| = abs_z."""
        bound = bound_fundamental(lams, abs_z, BoundMode.MAX_BOUND)
        z = abs_z * np.exp(2j * np.pi * np.arange(8) / 8)
        values = np.abs(fundamental_table(lams, z)[-1])
        assert np.all(values <= bound * (1 + 1e-9) + 1e-300)

    def test_linear_growth_bound(self) -> None:
        """lambda_n = n + 1 against the linear envelope with alpha = 1, beta = 1."""
        lams = [n + 1.0 for n in range(10)]
        growth = LinearGrowth(alpha=1.0, beta=1.0)
        bound = bound_fundamental(lams, 0.8, BoundMode.LINEAR_GROWTH, growth)
        value = abs(fundamental_table(lams, 0.8)[-1])
        assert value <= bound * (1 + 1e-9)

    def test_linear_growth_needs_beta(self) -> None:
        with pytest.raises(InvalidInputError):
            bound_fundamental([0.0, 1.0], 1.0, "linear-growth")

    def test_origin(self) -> None:
        assert bound_fundamental([2.0], 0.0) == 1.0
        assert bound_fundamental([2.0, 1.0], 0.0) == 0.0
