"""Witness reports and the check registry behind ``polyharm verify``."""

from __future__ import annotations

import json
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

DEFAULT_TOLERANCE = 1e-9


def _plain(value: Any) -> Any:
    """JSON-safe copy: complex as [re, im], non-finite floats as strings."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return _plain(value.item())
    if isinstance(value, complex):
        return [_plain(value.real), _plain(value.imag)]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of one witness search or inequality check."""

    theorem_id: str
    inputs: dict[str, Any]
    witness: Any
    residual: float
    tolerance: float = DEFAULT_TOLERANCE
    note: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "theorem_id": self.theorem_id,
            "inputs": _plain(self.inputs),
            "witness": _plain(self.witness),
            "residual": _plain(float(self.residual)),
            "tolerance": _plain(float(self.tolerance)),
            "passed": self.passed,
            "note": self.note,
        }

    @classmethod
    def failed(cls, theorem_id: str, inputs: dict[str, Any], note: str) -> WitnessReport:
        """Report for a search or computation that raised."""
        return cls(theorem_id=theorem_id, inputs=inputs, witness=None, residual=math.inf, note=note)


class Check(ABC):
    """One acceptance criterion; ``run`` returns the reports of its corpus."""

    name: str = "base_check"
    description: str = "Base check description"
    criterion: int = 0

    @abstractmethod
    def run(self, rng: np.random.Generator) -> list[WitnessReport]:
        ...


@dataclass
class CheckRegistry:
    """Registry for the verification checks."""

    _checks: dict[str, Check] = field(default_factory=dict)

    def register(self, check: Check) -> None:
        """Register a check."""
        self._checks[check.name] = check

    def get(self, name: str) -> Check | None:
        """Get a check by name."""
        return self._checks.get(name)

    def get_all(self) -> list[Check]:
        """Get all registered checks in criterion order."""
        return sorted(self._checks.values(), key=lambda c: (c.criterion, c.name))


@dataclass
class VerificationRun:
    """Reports of a full run, grouped by check."""

    results: dict[str, list[WitnessReport]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for reports in self.results.values() for r in reports)

    def failures(self) -> list[WitnessReport]:
        return [r for reports in self.results.values() for r in reports if not r.passed]

    def to_dict(self) -> list[dict[str, Any]]:
        """The JSON report array, one entry per witness."""
        return [
            {"check": name, **report.to_dict()}
            for name, reports in self.results.items()
            for report in reports
        ]

    def save(self, path: Path) -> None:
        """Write the report array as UTF-8 JSON."""
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")


def run_checks(registry: CheckRegistry, seed: int = 0, names: list[str] | None = None) -> VerificationRun:
    """Run the selected checks, each with its own generator derived from ``seed``."""
    run = VerificationRun()
    for check in registry.get_all():
        if names and check.name not in names:
            continue
        rng = np.random.default_rng([seed, check.criterion])
        run.results[check.name] = check.run(rng)
    return run
