"""Model definition files: {family, d, r0, r1, parameters}."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Literal, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from polyharm.spherical.basis import basis_count

ComplexValue = Union[float, tuple[float, float]]


def to_complex(value: ComplexValue) -> complex:
    """Numbers or [re, im] pairs."""
    if isinstance(value, (tuple, list)):
        return complex(value[0], value[1])
    return complex(value)


class HarmonicTermParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=0)
    l: int = Field(ge=1)
    alpha: float = 0.0
    beta: float = 0.0


class HarmonicParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    terms: list[HarmonicTermParams] = Field(default_factory=list)
    log_beta: float = 0.0


class PowerParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    alpha: float
    k: int = Field(default=0, ge=0)
    l: int = Field(default=1, ge=1)


class ExponentialParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: list[float]


class EigenParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    lam: ComplexValue
    k: int = Field(default=0, ge=0)
    l: int = Field(default=1, ge=1)
    coef: ComplexValue = 1.0


def _indices(params: BaseModel) -> list[tuple[int, int]]:
    if isinstance(params, HarmonicParams):
        return [(t.k, t.l) for t in params.terms]
    if isinstance(params, (PowerParams, EigenParams)):
        return [(params.k, params.l)]
    return []


FAMILY_PARAMS: dict[str, type[BaseModel]] = {
    "harmonic": HarmonicParams,
    "power": PowerParams,
    "exponential": ExponentialParams,
    "eigen": EigenParams,
}


class ModelSpec(BaseModel):
    """Validated model file document."""

    model_config = ConfigDict(extra="forbid")

    family: Literal["harmonic", "power", "exponential", "eigen"]
    d: Literal[2, 3]
    r0: float = Field(ge=0)
    r1: float = Field(default=math.inf, gt=0)
    parameters: dict[str, Any] = Field(default_factory=dict)

    @field_validator("r1", mode="before")
    @classmethod
    def _parse_inf(cls, value: Any) -> Any:
        if isinstance(value, str) and value.lower() in ("inf", "infinity"):
            return math.inf
        return value

    @model_validator(mode="after")
    def _check(self) -> ModelSpec:
        if not self.r0 < self.r1:
            raise ValueError(f"r0 must be below r1, got ({self.r0}, {self.r1})")
        params = FAMILY_PARAMS[self.family].model_validate(self.parameters)
        if self.family == "exponential" and len(params.a) != self.d:
            raise ValueError(f"exponential parameter 'a' must have {self.d} components")
        for k, l in _indices(params):
            a_k = basis_count(self.d, k)
            if l > a_k:
                raise ValueError(
                    f"harmonic index l = {l} exceeds a_k = {a_k} for k = {k}, d = {self.d}"
                )
        return self

    def family_params(self) -> BaseModel:
        return FAMILY_PARAMS[self.family].model_validate(self.parameters)


def load_model_spec(path: Path) -> ModelSpec:
    """Read a JSON or YAML model file."""
    with open(path, encoding="utf-8") as f:
        if path.suffix == ".json":
            data = json.load(f)
        else:
            data = yaml.safe_load(f) or {}
    return ModelSpec.model_validate(data)
