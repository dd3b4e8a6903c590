"""Error types for polyharm."""

from __future__ import annotations

from typing import Any


class PolyharmError(Exception):
    """Base class for every failure raised by the library."""

    def __init__(self, message: str, *, operation: str | None = None, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.operation = operation
        self.details = details

    def payload(self) -> dict[str, Any]:
        """Machine-readable description used by the CLI error document."""
        return {
            "error": type(self).__name__,
            "operation": self.operation,
            "message": self.message,
            "details": {key: _plain(value) for key, value in self.details.items()},
        }


def _plain(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, float) and value != value:
        return "nan"
    if isinstance(value, float) and value in (float("inf"), float("-inf")):
        return str(value)
    return value


class InvalidInputError(PolyharmError, ValueError):
    """Raised when an argument is outside the operation's contract."""
    pass


class ConfigurationError(PolyharmError, ValueError):
    """Raised when a numeric knob makes the requested computation impossible."""
    pass


class TruncationError(PolyharmError):
    """Raised when a truncated expansion cannot reach its tolerance."""

    def __init__(self, message: str, *, achieved_bound: float, **kwargs: Any) -> None:
        super().__init__(message, achieved_bound=achieved_bound, **kwargs)
        self.achieved_bound = achieved_bound


class CapabilityError(PolyharmError):
    """Raised when a function handle or model lacks a required oracle."""
    pass


class DomainError(PolyharmError, ValueError):
    """Raised when a point lies outside the admissible region."""

    def __init__(self, message: str, *, constraint: str, **kwargs: Any) -> None:
        super().__init__(message, constraint=constraint, **kwargs)
        self.constraint = constraint


class WrongBranchError(PolyharmError):
    """Raised when the odd-dimension routine is used for even d or vice versa."""
    pass


class PreconditionError(PolyharmError):
    """Raised when a witness search is started on a case its theorem does not cover."""
    pass


class SearchFailure(PolyharmError):
    """Raised when a witness search finds no sign change."""
    pass


class InvariantViolation(PolyharmError):
    """Raised when an internal structural guarantee does not hold."""
    pass
