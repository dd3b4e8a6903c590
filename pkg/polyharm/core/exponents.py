"""Exponent sequences of constant-coefficient operators."""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from polyharm.core.errors import InvalidInputError


class SequenceKind(Enum):
    """Growth class of an exponent sequence."""

    EXPLICIT = "explicit-list"
    BOUNDED = "bounded-rule"
    LINEAR_GROWTH = "linear-growth-rule"

    def __str__(self) -> str:
        return self.value


def _is_integral(value: complex) -> bool:
    return value.imag == 0 and float(value.real).is_integer()


@dataclass(frozen=True)
class ExponentSequence:
    """Generator of the exponents lambda_0, lambda_1, ... of an operator.

    Explicit sequences store their values; rule-based sequences call ``rule(n)``.
    ``bound`` is sup|lambda_n| for bounded rules, ``alpha`` and ``beta`` the linear
    envelope |lambda_n| <= alpha + beta * n for linear-growth rules.
    """

    kind: SequenceKind
    values: tuple[complex, ...] = ()
    rule: Callable[[int], complex] | None = field(default=None, compare=False)
    beta: float = 0.0
    alpha: float = 0.0
    bound: float | None = None
    label: str = ""

    @classmethod
    def explicit(cls, values: Sequence[complex]) -> ExponentSequence:
        """Sequence made of a finite list of exponents."""
        if len(values) == 0:
            raise InvalidInputError("Exponent list is empty", operation="ExponentSequence")
        vals = tuple(complex(v) for v in values)
        return cls(
            kind=SequenceKind.EXPLICIT,
            values=vals,
            bound=max(abs(v) for v in vals),
            label=f"explicit({len(vals)})",
        )

    @classmethod
    def bounded(cls, rule: Callable[[int], complex], bound: float, label: str = "") -> ExponentSequence:
        """Sequence generated by ``rule`` with |lambda_n| <= bound."""
        if bound < 0:
            raise InvalidInputError("bound must be nonnegative", operation="ExponentSequence")
        return cls(kind=SequenceKind.BOUNDED, rule=rule, bound=float(bound), label=label or "bounded")

    @classmethod
    def linear(
        cls,
        rule: Callable[[int], complex],
        alpha: float,
        beta: float,
        label: str = "",
    ) -> ExponentSequence:
        """Sequence generated by ``rule`` with |lambda_n| <= alpha + beta * n."""
        if alpha < 0 or beta < 0:
            raise InvalidInputError("alpha and beta must be nonnegative", operation="ExponentSequence")
        return cls(
            kind=SequenceKind.LINEAR_GROWTH,
            rule=rule,
            alpha=float(alpha),
            beta=float(beta),
            label=label or "linear",
        )

    @classmethod
    def constant(cls, value: complex = 0.0) -> ExponentSequence:
        """lambda_n = value for every n."""
        c = complex(value)
        return cls.bounded(lambda n: c, abs(c), label=f"constant({_fmt(c)})")

    @classmethod
    def arithmetic(cls, start: complex, step: complex) -> ExponentSequence:
        """lambda_n = start + step * n."""
        a, w = complex(start), complex(step)
        if w == 0:
            return cls.constant(a)
        return cls.linear(
            lambda n: a + w * n,
            alpha=abs(a),
            beta=abs(w),
            label=f"arithmetic({_fmt(a)},{_fmt(w)})",
        )

    def value(self, n: int) -> complex:
        """Return lambda_n."""
        if n < 0:
            raise InvalidInputError(f"Negative exponent index {n}", operation="ExponentSequence")
        if self.kind == SequenceKind.EXPLICIT:
            if n >= len(self.values):
                raise InvalidInputError(
                    f"Explicit sequence has no index {n} (length {len(self.values)})",
                    operation="ExponentSequence",
                )
            return self.values[n]
        assert self.rule is not None
        return complex(self.rule(n))

    def prefix(self, n: int) -> tuple[complex, ...]:
        """Return Lambda_n = (lambda_0, ..., lambda_n)."""
        return tuple(self.value(j) for j in range(n + 1))

    def check_prefix(self, n: int) -> bool:
        """Assert the growth invariant of this sequence on Lambda_n."""
        for j, lam in enumerate(self.prefix(n)):
            if self.kind == SequenceKind.BOUNDED and abs(lam) > self.bound + 1e-12:
                return False
            if self.kind == SequenceKind.LINEAR_GROWTH and abs(lam) > self.alpha + self.beta * j + 1e-12:
                return False
        return True

    def is_integral(self, n: int) -> bool:
        """Whether every exponent of Lambda_n is an integer."""
        return all(_is_integral(lam) for lam in self.prefix(n))

    def multiplicity_table(self, n: int, tol: float = 1e-9) -> dict[complex, int]:
        """Distinct roots of q_n with their multiplicities."""
        return multiplicity_table(self.prefix(n), tol=tol)

    def to_dict(self, n: int | None = None) -> dict[str, Any]:
        """Describe the sequence; include Lambda_n when ``n`` is given."""
        data: dict[str, Any] = {
            "kind": self.kind.value,
            "label": self.label,
            "alpha": self.alpha,
            "beta": self.beta,
            "bound": self.bound,
        }
        if n is not None:
            data["prefix"] = [[lam.real, lam.imag] for lam in self.prefix(n)]
        return data


def multiplicity_table(lams: Sequence[complex], tol: float = 1e-9) -> dict[complex, int]:
    """Group equal exponents.

    Integer-valued prefixes are compared exactly, floating ones within ``tol``.
    The first representative of each group is the key.
    """
    values = [complex(v) for v in lams]
    if all(_is_integral(v) for v in values):
        return dict(Counter(values))
    table: dict[complex, int] = {}
    for v in values:
        for root in table:
            if abs(root - v) <= tol:
                table[root] += 1
                break
        else:
            table[v] = 1
    return table


def _fmt(value: complex) -> str:
    if value.imag == 0:
        return repr(value.real)
    return repr(value)
