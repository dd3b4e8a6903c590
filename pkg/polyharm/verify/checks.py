"""Acceptance checks run by ``polyharm verify``, one per criterion."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from typing import Any

import numpy as np

from polyharm.core import (
    BoundMode,
    ExponentSequence,
    ExpPolyHandle,
    ExpPolyTerm,
    FundamentalFunction,
    LinearGrowth,
    Strategy,
    bound_fundamental,
    eval_fundamental,
    fundamental_taylor_coeffs,
    partial_fractions,
    taylor_expand,
    taylor_remainder,
)
from polyharm.core.errors import PolyharmError
from polyharm.extension import ModelExtension, extension_coeffs_even, log_jet
from polyharm.models import ExponentialModel, HarmonicModel, HarmonicTerm, PowerModel, estimate_type
from polyharm.spherical import exponent_sequence_for, flc, harmonic_basis, lie_point, parseval_check
from polyharm.verify.base import DEFAULT_TOLERANCE, Check, CheckRegistry, WitnessReport
from polyharm.verify.witnesses import (
    HandleSource,
    ModelJetSource,
    check_even_to_odd,
    check_factorial_root_limit,
    check_odd_derivative_bound,
    lemma_sides,
    mean_value_point,
    rolle_point,
)

logger = logging.getLogger(__name__)


def _guarded(theorem_id: str, inputs: dict[str, Any], fn: Callable[[], WitnessReport]) -> WitnessReport:
    """Run ``fn``; a library error becomes a failed report."""
    try:
        return fn()
    except PolyharmError as e:
        logger.warning("%s failed: %s", theorem_id, e.message)
        return WitnessReport.failed(theorem_id, inputs, f"{type(e).__name__}: {e.message}")


def _excess(value: float, bound: float) -> float:
    """Relative amount by which ``value`` exceeds ``bound``."""
    return max(0.0, (value - bound) / max(abs(bound), 1e-300))


def random_prefix(rng: np.random.Generator, n: int, radius: float = 4.0, gap: float = 0.5) -> list[complex]:
    """n + 1 exponents in the disc of ``radius``, pairwise at least ``gap`` apart; half of them real."""
    real = rng.random() < 0.5
    values: list[complex] = []
    attempts = 0
    while len(values) < n + 1:
        attempts += 1
        if attempts > 1000:
            values, attempts = [], 0
        if real:
            cand = complex(rng.uniform(-radius, radius))
        else:
            cand = complex(*rng.uniform(-radius, radius, size=2))
            if abs(cand) > radius:
                continue
        if all(abs(cand - v) >= gap for v in values):
            values.append(cand)
    return values


def harmonic_demo(d: int = 3) -> HarmonicModel:
    """The harmonic model used by the extension checks."""
    if d == 2:
        terms = [HarmonicTerm(1, 1, 0.3, 0.2), HarmonicTerm(2, 2, -0.5, 0.1), HarmonicTerm(3, 1, 0.25, 0.0)]
        return HarmonicModel(2, 0.5, 2.0, terms, log_beta=0.7)
    terms = [
        HarmonicTerm(0, 1, 1.0, 0.5),
        HarmonicTerm(1, 1, 2.0, 0.5),
        HarmonicTerm(2, 3, -0.75, 0.25),
        HarmonicTerm(3, 6, 0.4, -0.1),
    ]
    return HarmonicModel(3, 0.5, 2.0, terms)


def harmonic_continuation(m: HarmonicModel, z: np.ndarray) -> complex:
    """Closed-form continuation: Y_{k,l}(z)(alpha + beta q^((2 - d - 2k)/2)), principal branch."""
    q = complex(np.sum(z * z))
    total = 0j
    for t in m.terms:
        y = complex(harmonic_basis(m.d, t.k).evaluate(t.l, z[None, :])[0])
        total += y * (t.alpha + t.beta * np.power(q, (2 - m.d - 2 * t.k) / 2))
    if m.log_beta:
        total += m.log_beta * 0.5 * np.log(q) * complex(harmonic_basis(m.d, 0).evaluate(1, z[None, :])[0])
    return total


def random_shell_points(rng: np.random.Generator, d: int, a: float, b: float, count: int) -> np.ndarray:
    """Points with |x| uniform in [a, b] and uniform directions."""
    dirs = rng.normal(size=(count, d))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    return dirs * rng.uniform(a, b, size=(count, 1))


def random_lie_points(rng: np.random.Generator, ext: ModelExtension, count: int, spread: float = 0.15) -> list[np.ndarray]:
    """Complex points x + iy inside the Lie annulus of an extension."""
    points: list[np.ndarray] = []
    lo, hi = ext.r0, min(ext.r_outer, 1e6)
    while len(points) < count:
        x = random_shell_points(rng, ext.d, lo * 1.2, hi / 1.2, 1)[0]
        z = x + 1j * spread * np.linalg.norm(x) * rng.normal(size=ext.d) / math.sqrt(ext.d)
        if ext.membership(z).inside:
            points.append(z)
    return points


class FundamentalAgreementCheck(Check):
    name = "fundamental_agreement"
    description = "Series, contour and closed-form evaluations of Phi agree"
    criterion = 1

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        prefixes = [random_prefix(rng, int(rng.integers(0, 9))) for _ in range(50)]
        prefixes += [[0, 0, 0, 0], [0, 1, 2], [1, 1, 2, 3, 3]]
        reports = []
        for lams in prefixes:
            radius = 2.0 * np.sqrt(rng.random(20))
            z = radius * np.exp(2j * np.pi * rng.random(20))
            inputs = {"prefix": lams}

            def agree(lams: list[complex] = lams, z: np.ndarray = z) -> WitnessReport:
                phi = FundamentalFunction.from_exponents(lams)
                values = [np.asarray(eval_fundamental(phi, z, s)) for s in Strategy]
                scale = np.maximum(1.0, np.abs(values[0]))
                gap = max(float(np.max(np.abs(u - v) / scale)) for u in values for v in values)
                return WitnessReport("fundamental-agreement", {"prefix": lams, "closed_form": str(phi.closed_form)}, None, gap)

            reports.append(_guarded("fundamental-agreement", inputs, agree))
        return reports


class CauchyDataCheck(Check):
    name = "cauchy_data"
    description = "Phi^(k)(0) = 0 for k < n, 1 at k = n, sum of exponents at k = n + 1"
    criterion = 2

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        reports = []
        for n in range(13):
            lams = random_prefix(rng, n)
            coeffs = fundamental_taylor_coeffs(lams, n + 1)
            moment = sum(lams)
            residual = max(
                max((abs(c) for c in coeffs[:n]), default=0.0),
                abs(coeffs[n] - 1.0),
                abs(coeffs[n + 1] - moment) / max(1.0, abs(moment)),
            )
            reports.append(WitnessReport("cauchy-data", {"prefix": lams}, coeffs[n + 1], residual, tolerance=1e-12))
        return reports


class LogTwoExampleCheck(Check):
    name = "log_two_example"
    description = "Expansion of f = 1 along lambda_n = n + 1 has radius ln 2"
    criterion = 3

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        seq = ExponentSequence.linear(lambda n: complex(n + 1), alpha=1.0, beta=1.0, label="n+1")
        series = taylor_expand(ExpPolyHandle.constant(1.0), seq, 0.0, 40)
        exact = [(-1) ** n * math.factorial(n) for n in range(13)]
        integer_gap = max(abs(series.coeffs[n] - exact[n]) for n in range(13))
        radius_gap = abs(series.radius / math.log(2.0) - 1.0)
        sum_gap = abs(series.partial_sum(0.5) - 1.0)
        mags = np.abs(series.terms(0.8))[20:]
        drops = float(np.max(np.maximum(mags[:-1] - mags[1:], 0.0) / mags[:-1]))
        inputs = {"f": "1", "lambda_n": "n+1"}
        return [
            WitnessReport("log-two-integers", inputs, [c.real for c in series.coeffs[:13]], integer_gap, tolerance=0.0),
            WitnessReport("log-two-radius", inputs, series.radius, radius_gap, tolerance=0.02),
            WitnessReport("log-two-partial-sum", {**inputs, "x": 0.5}, series.partial_sum(0.5), sum_gap, tolerance=1e-6),
            WitnessReport("log-two-divergence", {**inputs, "x": 0.8}, mags.tolist(), drops, tolerance=0.0),
        ]


class RemainderIdentityCheck(Check):
    name = "remainder_identity"
    description = "f = s_m + R_m for exp and two model radial sections"
    criterion = 4

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        bounded = ExponentSequence.bounded(lambda n: complex(0.5 * (-1) ** n), bound=0.5, label="alternating")
        harmonic = harmonic_demo(3)
        exponential = ExponentialModel(3, 0.5, 2.0, [0.3, -0.2, 0.6])
        cases = [
            ("exp", ExpPolyHandle.exponential(1.0), 0.0, 1.0),
            ("harmonic-section", harmonic.radial_section([0.3, 0.4, 0.5]), 1.0, 1.4),
            ("exponential-section", exponential.radial_section([1.0, 1.0, 1.0]), 0.8, 1.5),
        ]
        reports = []
        for label, handle, x0, x in cases:
            f_x = handle(x)
            for m in range(7):
                inputs = {"f": label, "x0": x0, "x": x, "m": m}

                def identity(handle=handle, x0=x0, x=x, m=m, f_x=f_x, inputs=inputs) -> WitnessReport:
                    s_m = taylor_expand(handle, bounded, x0, m).partial_sum(x)
                    r_m = taylor_remainder(handle, bounded, x0, m, x)
                    return WitnessReport("taylor-remainder", inputs, r_m, abs(f_x - s_m - r_m), tolerance=1e-8)

                reports.append(_guarded("taylor-remainder", inputs, identity))
        return reports


def qn_prime(lams: list[complex], j: int) -> complex:
    """prod_{s != j} (lambda_j - lambda_s)."""
    return complex(np.prod([lams[j] - lam for s, lam in enumerate(lams) if s != j]))


class BoundsCheck(Check):
    name = "bounds"
    description = "Majorants of Phi, monotonicity, symbol derivative and residue bounds"
    criterion = 5

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        reports = []
        circle = np.exp(2j * np.pi * np.arange(100) / 100)

        worst = 0.0
        for _ in range(30):
            lams = random_prefix(rng, int(rng.integers(0, 9)))
            abs_z = float(rng.uniform(0.1, 2.0))
            phi = FundamentalFunction.from_exponents(lams)
            values = np.abs(np.asarray(eval_fundamental(phi, abs_z * circle)))
            worst = max(worst, _excess(float(values.max()), bound_fundamental(lams, abs_z)))
        reports.append(WitnessReport("max-bound", {"cases": 30}, None, worst))

        worst = 0.0
        for _ in range(30):
            n = int(rng.integers(1, 13))
            beta = float(rng.uniform(0.5, 2.0))
            lams = [complex(beta * j + rng.uniform(-0.5, 0.5)) for j in range(n + 1)]
            growth = LinearGrowth(alpha=0.5, beta=beta, eps=0.0)
            abs_z = float(rng.uniform(0.1, 1.5))
            phi = FundamentalFunction.from_exponents(lams)
            values = np.abs(np.asarray(eval_fundamental(phi, abs_z * circle)))
            bound = bound_fundamental(lams, abs_z, BoundMode.LINEAR_GROWTH, growth)
            worst = max(worst, _excess(float(values.max()), bound))
        reports.append(WitnessReport("linear-growth-bound", {"cases": 30}, None, worst))

        worst = 0.0
        for _ in range(30):
            n = int(rng.integers(0, 9))
            lams = rng.uniform(0.0, 3.0, size=n + 1)
            mus = lams + rng.uniform(0.0, 1.0, size=n + 1)
            z = complex(*rng.uniform(-1.5, 1.5, size=2))
            lower = abs(eval_fundamental(FundamentalFunction.from_exponents(lams), z))
            upper = eval_fundamental(FundamentalFunction.from_exponents(mus), abs(z)).real
            worst = max(worst, _excess(lower, upper))
        reports.append(WitnessReport("monotonicity", {"cases": 30}, None, worst))

        worst = 0.0
        for k in range(5):
            for n in range(1, 15):
                lams = list(exponent_sequence_for(k, 3).prefix(n))
                floor = math.factorial(n) / 2.0**n
                for j in range(n + 1):
                    worst = max(worst, _excess(floor, abs(qn_prime(lams, j))))
        reports.append(WitnessReport("symbol-derivative-bound", {"d": 3, "k": "0..4", "n": "1..14"}, None, worst))

        worst = 0.0
        for d in (2, 4):
            for k in range(5):
                for n in range(2, 15):
                    bound = 2.0**n / math.factorial(n - 2)
                    for term in partial_fractions(exponent_sequence_for(k, d).prefix(n)):
                        worst = max(worst, _excess(max(abs(term.simple), abs(term.double)), bound))
        reports.append(WitnessReport("residue-bound", {"d": [2, 4], "k": "0..4", "n": "2..14"}, None, worst))
        return reports


class FourierLaplaceCheck(Check):
    name = "fourier_laplace"
    description = "Quadrature coefficients match closed forms; Parseval on band-limited data"
    criterion = 6

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        reports = []
        worst = 0.0
        for r in (0.5, 1.3, 2.7):
            value = flc(lambda x: np.log(np.linalg.norm(x, axis=-1)), 0, 1, r, d=2)
            worst = max(worst, abs(value - math.sqrt(2 * math.pi) * math.log(r)))
        reports.append(WitnessReport("log-norm-coefficient", {"d": 2}, None, worst, tolerance=1e-10))

        for d in (2, 3):
            m = harmonic_demo(d)
            worst = 0.0
            for r in (0.7, 1.3):
                for k in range(5):
                    for l in range(1, harmonic_basis(d, k).a_k + 1):
                        value = flc(m, k, l, r, d=d, r0=m.r0, r1=m.r1)
                        worst = max(worst, abs(value - m.exact_flc(k, l, r)))
            reports.append(WitnessReport("harmonic-coefficients", {"d": d}, None, worst, tolerance=1e-10))

            lhs, rhs = parseval_check(m, 1.1, 6, d=d)
            reports.append(WitnessReport("parseval", {"d": d, "r": 1.1}, [lhs, rhs], abs(lhs - rhs) / max(1.0, lhs), tolerance=1e-8))
        return reports


class RestrictionCheck(Check):
    name = "restriction_identity"
    description = "F restricts to f, recovers harmonic coefficients, and continues correctly"
    criterion = 7

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        m = harmonic_demo(3)
        ext = ModelExtension.build(m, K_max=12, J=20, N=40)
        inputs = {"family": "harmonic", "d": 3, "K_max": 12, "J": 20}

        points = random_shell_points(rng, 3, 0.55, 1.9, 50)
        restriction = max(abs(ext.evaluate(x) - m(x)) for x in points)

        expected = {(t.k, t.l): (t.alpha, t.beta) for t in m.terms}
        coefficient_gap = 0.0
        for s in ext.series:
            alpha, beta = expected.get((s.k, s.l), (0.0, 0.0))
            target = np.zeros(len(s.coeffs), dtype=complex)
            target[0], target[1] = alpha, beta
            coefficient_gap = max(coefficient_gap, float(np.max(np.abs(np.asarray(s.coeffs) - target))))

        complex_points = random_lie_points(rng, ext, 20)
        conjugation = max(abs(ext.evaluate(z.conj()) - np.conj(ext.evaluate(z))) for z in complex_points)
        oracle = max(abs(ext.evaluate(z) - harmonic_continuation(m, z)) for z in complex_points)
        return [
            WitnessReport("restriction", inputs, None, restriction, tolerance=1e-6),
            WitnessReport("harmonic-recovery", inputs, None, coefficient_gap, tolerance=1e-6),
            WitnessReport("conjugation-symmetry", inputs, None, conjugation, tolerance=1e-8),
            WitnessReport("continuation-oracle", inputs, None, oracle, tolerance=1e-5),
        ]


class EvenDimensionCheck(Check):
    name = "even_dimension"
    description = "Even-d coefficients recover the harmonic data including the log term"
    criterion = 8

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        m = harmonic_demo(2)
        v0 = 0.0
        expected = {(t.k, t.l): (t.alpha, t.beta) for t in m.terms}
        expected[(0, 1)] = (0.0, m.log_beta)
        gap = 0.0
        for (k, l), (alpha, beta) in expected.items():
            series = extension_coeffs_even(log_jet(m, k, l, v0, 40), 20)
            gap = max(gap, abs(series.coeffs[0] - alpha), abs(series.coeffs[1] - beta))
            gap = max(gap, max((abs(c) for c in series.coeffs[2:]), default=0.0))

        terms = {t.root: t for t in partial_fractions([0, 2, 2])}
        fixture = max(abs(terms[0j].simple - 0.25), abs(terms[2 + 0j].simple + 0.25), abs(terms[2 + 0j].double - 0.5))

        ext = ModelExtension.build(m, K_max=8, J=20, N=40)
        points = random_shell_points(rng, 2, 0.55, 1.9, 30)
        restriction = max(abs(ext.evaluate(x) - m(x)) for x in points)
        return [
            WitnessReport("even-harmonic-recovery", {"d": 2, "log_beta": m.log_beta}, None, gap, tolerance=1e-6),
            WitnessReport("partial-fraction-fixture", {"roots": [0, 2, 2]}, [0.25, -0.25, 0.5], fixture, tolerance=0.0),
            WitnessReport("even-restriction", {"d": 2}, None, restriction, tolerance=1e-6),
        ]


class ExpansionPointCheck(Check):
    name = "expansion_point"
    description = "Extension coefficients do not depend on v0"
    criterion = 9

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        reports = []
        models = [harmonic_demo(3), ExponentialModel(3, 0.5, 1.5, [0.2, -0.3, 0.4])]
        for m in models:
            first = ModelExtension.build(m, K_max=6, J=12, N=40, v0=-0.3)
            second = ModelExtension.build(m, K_max=6, J=12, N=40, v0=-0.1)
            gap = max(
                float(np.max(np.abs(np.asarray(s.coeffs) - np.asarray(t.coeffs))))
                for s, t in zip(first.series, second.series)
            )
            reports.append(WitnessReport("v0-independence", {"family": m.family, "v0": [-0.3, -0.1]}, None, gap, tolerance=1e-7))
        return reports


class TypeTrendCheck(Check):
    name = "type_trend"
    description = "Type estimator trends for type-zero and power families"
    criterion = 10

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        reports = []
        harmonic = HarmonicModel(3, 0.5, 3.0, harmonic_demo(3).terms)
        for m in (harmonic, ExponentialModel(3, 0.5, 3.0, [0.1, 0.2, -0.1])):
            t = np.asarray(estimate_type(m, 1.0, 2.0))
            rises = float(np.max(np.maximum(t[1:] - t[:-1], 0.0)))
            residual = max(rises, _excess(t[-1], 0.25))
            reports.append(
                WitnessReport(f"type-decreasing-{m.family}", {"K": [1, 2]}, t[-1], residual, tolerance=1e-12)
            )

        power = PowerModel(3, 0.5, 3.0, alpha=-0.25, k=0)
        t = np.asarray(estimate_type(power, 1.0, 2.0))
        rises = bool(np.all(t[3:] > t[2:-1]))
        window = 0.0 if 0.85 <= t[-1] <= 1.15 else abs(t[-1] - 1.0)
        reports.append(
            WitnessReport(
                "type-increasing-power",
                {"alpha": -0.25, "K": [1, 2], "window": [0.85, 1.15]},
                t[-1],
                window if rises else math.inf,
                tolerance=0.0,
            )
        )

        finite = PowerModel(3, 0.5, 3.0, alpha=0.5, k=0)
        t = np.asarray(estimate_type(finite, 1.0, 2.0))
        reports.append(
            WitnessReport(
                "type-finite-order-power", {"alpha": 0.5, "K": [1, 2]}, t[-1], float(np.max(t[1:])), tolerance=0.0
            )
        )
        return reports


def _sine_bump(omega: float, rate: float, a: float) -> ExpPolyHandle:
    """sin(omega (x - a)) e^(rate x)."""
    return ExpPolyHandle([ExpPolyTerm(coef=-1j * np.exp(-1j * omega * a), rate=complex(rate, omega))], real=True)


def _random_cubic(rng: np.random.Generator) -> ExpPolyHandle:
    return ExpPolyHandle.polynomial(list(rng.uniform(-2.0, 2.0, size=4)))


class AppendixWitnessCheck(Check):
    name = "appendix_witnesses"
    description = "Rolle and mean-value witnesses, odd-order estimates and factorial-root limits"
    criterion = 11

    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        reports = []

        rolle_cases = [(ExpPolyHandle.exponential(lam), lam, 0.0, 1.0) for lam in (-1.0, 0.5, 2.0)]
        rolle_cases.append((_sine_bump(math.pi, 0.0, 0.0), 0.0, 0.0, 1.0))
        rolle_cases.append((_sine_bump(math.pi, 0.7, 0.0), 0.7, 0.0, 1.0))
        for _ in range(20):
            a = float(rng.uniform(-2.0, 2.0))
            b = a + float(rng.uniform(0.2, 2.0))
            lam = float(rng.uniform(-2.0, 2.0))
            omega = int(rng.integers(1, 4)) * math.pi / (b - a)
            rolle_cases.append((_sine_bump(omega, lam, a), lam, a, b))
        for f, lam, a, b in rolle_cases:
            inputs = {"lambda": lam, "a": a, "b": b}
            reports.append(_guarded("generalized-rolle", inputs, lambda f=f, lam=lam, a=a, b=b: rolle_point(f, lam, a, b)))

        mvt_cases = [
            (ExpPolyHandle.constant(1.5), 0.8, 0.0, 1.0),
            (ExpPolyHandle.polynomial([0.0, 1.0]), 1.0, 0.0, 2.0),
        ]
        for _ in range(20):
            a = float(rng.uniform(-2.0, 2.0))
            b = a + float(rng.uniform(0.1, 2.0))
            lam = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.05, 2.0))
            mvt_cases.append((_random_cubic(rng), lam, a, b))
        for f, lam, a, b in mvt_cases:
            inputs = {"lambda": lam, "a": a, "b": b}
            reports.append(_guarded("generalized-mean-value", inputs, lambda f=f, lam=lam, a=a, b=b: mean_value_point(f, lam, a, b)))

        cubic = ExpPolyHandle.polynomial([0.0, 0.0, 0.0, 1.0])

        def degenerate() -> WitnessReport:
            found = mean_value_point(cubic, 1e-6, 0.0, 1.0)
            classical = 1.0 / math.sqrt(3.0)
            gap = abs(found.witness - classical)
            return WitnessReport("mean-value-degenerate", {"lambda": 1e-6}, found.witness, gap, tolerance=1e-3)

        reports.append(_guarded("mean-value-degenerate", {"lambda": 1e-6}, degenerate))

        odd_cases = [
            (ExpPolyHandle.exponential(0.4), 0.4, 1.1, 0.0, 1.0),
            (_sine_bump(1.0, 0.0, 0.0), 0.3, -0.5, 0.0, 1.0),
        ]
        for _ in range(100):
            a = float(rng.uniform(-2.0, 2.0))
            odd_cases.append(
                (_random_cubic(rng), float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2)), a, a + float(rng.uniform(0.1, 2.0)))
            )
        for f, l0, l1, a, b in odd_cases:
            reports.append(check_odd_derivative_bound(f, l0, l1, a, b))

        lams = np.linspace(-3.0, 3.0, 50)
        hs = np.linspace(3.0 / 50, 3.0, 50)
        lemma = max(_excess(*lemma_sides(float(lam), float(h))) for lam in lams for h in hs)
        reports.append(WitnessReport("lemma-coth-bound", {"grid": "50x50"}, None, lemma))

        reports.extend(self._even_to_odd())

        bounded = [complex(0.5 + 0.5 * math.sin(n)) for n in range(61)]
        for x in (0.5, 1.0, 2.0):
            reports.append(
                check_factorial_root_limit(bounded, x, x, 0.10, "factorial-root-bounded", compare_at=30)
            )
        growing = [complex(n + 0.5 * math.sin(n)) for n in range(61)]
        reports.append(check_factorial_root_limit(growing, 0.5, math.expm1(0.5), 0.15, "factorial-root-linear"))
        return reports

    def _even_to_odd(self) -> list[WitnessReport]:
        reports = []
        flat = ExponentSequence.bounded(lambda n: complex(0.3), bound=0.3, label="constant")
        reports.append(check_even_to_odd(HandleSource(ExpPolyHandle.exponential(0.3), flat), 0.0, 0.25, 5))

        models = [harmonic_demo(3), ExponentialModel(3, 0.5, 2.0, [0.0, 0.0, 0.8])]
        v0 = math.log(0.7)
        for m in models:
            for k in range(7):
                for delta in (0.1, 0.25):
                    source = ModelJetSource(m, k, 1, degree=24)
                    inputs = {"model": m.family, "k": k, "delta": delta}
                    reports.append(_guarded("even-to-odd", inputs, lambda s=source, dl=delta: check_even_to_odd(s, v0, dl, 10)))
        return reports


def get_default_checks() -> CheckRegistry:
    """Registry with every acceptance check."""
    registry = CheckRegistry()
    for check in (
        FundamentalAgreementCheck(),
        CauchyDataCheck(),
        LogTwoExampleCheck(),
        RemainderIdentityCheck(),
        BoundsCheck(),
        FourierLaplaceCheck(),
        RestrictionCheck(),
        EvenDimensionCheck(),
        ExpansionPointCheck(),
        TypeTrendCheck(),
        AppendixWitnessCheck(),
    ):
        registry.register(check)
    return registry
