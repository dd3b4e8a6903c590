"""Run configuration for the polyharm command line."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Literal

import numpy as np
import yaml
from pydantic import AliasChoices, BaseModel, ConfigDict, Field, model_validator

from polyharm.core.exponents import ExponentSequence
from polyharm.core.handles import (
    ExpPolyHandle,
    FunctionHandle,
    FundamentalHandle,
    PowerSumHandle,
)
from polyharm.models.spec import ComplexValue, ModelSpec, to_complex

Command = Literal["fundamental", "expand", "radius", "flc", "jet", "extend", "verify"]

COMMANDS: tuple[str, ...] = ("fundamental", "expand", "radius", "flc", "jet", "extend", "verify")
NEEDS_MODEL = frozenset({"flc", "jet", "extend"})


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid")


class Knobs(_Block):
    """Truncation and tolerance knobs; unset knobs fall back to Settings."""

    N: int | None = Field(default=None, gt=0)
    J: int | None = Field(default=None, gt=0)
    K_max: int | None = Field(default=None, gt=0)
    quad_degree: int | None = Field(
        default=None, gt=0, validation_alias=AliasChoices("quad_degree", "quad_nodes")
    )
    tol: float | None = Field(default=None, gt=0, le=1e-2)


class OutputSpec(_Block):
    path: Path | None = None
    format: Literal["csv", "json"] = "csv"


class GridSpec(_Block):
    """count equispaced values from start to stop."""

    start: float
    stop: float
    count: int = Field(default=1, ge=1)

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.count)


class ExponentSpec(_Block):
    """An exponent sequence: explicit list, constant or arithmetic rule."""

    kind: Literal["explicit", "constant", "arithmetic"] = "explicit"
    values: list[ComplexValue] = Field(default_factory=list)
    value: ComplexValue = 0.0
    start: ComplexValue = 0.0
    step: ComplexValue = 1.0

    @model_validator(mode="after")
    def _check(self) -> ExponentSpec:
        if self.kind == "explicit" and not self.values:
            raise ValueError("explicit exponents need a non-empty 'values' list")
        return self

    def to_sequence(self) -> ExponentSequence:
        if self.kind == "explicit":
            return ExponentSequence.explicit([to_complex(v) for v in self.values])
        if self.kind == "constant":
            return ExponentSequence.constant(to_complex(self.value))
        return ExponentSequence.arithmetic(to_complex(self.start), to_complex(self.step))


class PowerTermSpec(_Block):
    coef: ComplexValue = 1.0
    power: float = 0.0


class HandleSpec(_Block):
    """A function of one variable with exact derivatives."""

    kind: Literal["constant", "exponential", "polynomial", "damped_sine", "power_sum", "fundamental"]
    coef: ComplexValue = 1.0
    rate: ComplexValue = 0.0
    coeffs: list[ComplexValue] = Field(default_factory=list)
    omega: float = 1.0
    terms: list[PowerTermSpec] = Field(default_factory=list)
    log_coef: ComplexValue = 0.0
    exponents: list[ComplexValue] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check(self) -> HandleSpec:
        if self.kind == "polynomial" and not self.coeffs:
            raise ValueError("polynomial handles need 'coeffs'")
        if self.kind == "fundamental" and not self.exponents:
            raise ValueError("fundamental handles need 'exponents'")
        return self

    def to_handle(self) -> FunctionHandle:
        if self.kind == "constant":
            return ExpPolyHandle.constant(to_complex(self.coef))
        if self.kind == "exponential":
            return ExpPolyHandle.exponential(to_complex(self.rate), to_complex(self.coef))
        if self.kind == "polynomial":
            return ExpPolyHandle.polynomial([to_complex(c) for c in self.coeffs])
        if self.kind == "damped_sine":
            return ExpPolyHandle.damped_sine(self.omega, to_complex(self.rate).real)
        if self.kind == "power_sum":
            return PowerSumHandle(
                [(to_complex(t.coef), t.power) for t in self.terms],
                log_coef=to_complex(self.log_coef),
            )
        return FundamentalHandle([to_complex(v) for v in self.exponents])


class FundamentalParams(_Block):
    exponents: list[ComplexValue] = Field(min_length=1)
    re: GridSpec
    im: GridSpec = GridSpec(start=0.0, stop=0.0, count=1)
    contour_radius: float | None = Field(default=None, gt=0)


class ExpandParams(_Block):
    function: HandleSpec
    exponents: ExponentSpec
    x0: float = 0.0
    points: list[float] = Field(default_factory=list)


class RadiusParams(_Block):
    coeffs: list[ComplexValue] = Field(min_length=1)
    beta: float = Field(default=0.0, ge=0)


class FlcParams(_Block):
    k: int = Field(ge=0)
    l: int = Field(default=1, ge=1)
    r_min: float = Field(gt=0)
    r_max: float = Field(gt=0)
    count: int = Field(default=16, ge=1)

    @model_validator(mode="after")
    def _check(self) -> FlcParams:
        if self.r_max < self.r_min:
            raise ValueError("r_max must not be below r_min")
        return self


class JetParams(_Block):
    k: int = Field(ge=0)
    l: int = Field(default=1, ge=1)
    v0: float | None = None


class ExtendParams(_Block):
    """Evaluate F on the slice z = base + (x + i y) e_axis."""

    base: list[ComplexValue]
    axis: int = Field(default=0, ge=0)
    re: GridSpec
    im: GridSpec = GridSpec(start=0.0, stop=0.0, count=1)
    v0: float | None = None
    series_out: Path | None = None

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Slice points of shape (M, d) and their offsets x + i y, re varying fastest."""
        base = np.array([to_complex(v) for v in self.base], dtype=complex)
        offsets = np.array([complex(x, y) for y in self.im.values() for x in self.re.values()])
        pts = np.repeat(base[None, :], offsets.size, axis=0)
        pts[:, self.axis] += offsets
        return pts, offsets


class VerifyParams(_Block):
    seed: int = 0
    checks: list[str] | None = None


class RunConfig(_Block):
    """One run of the polyharm command line."""

    command: Command
    model: ModelSpec | None = None
    knobs: Knobs = Field(default_factory=Knobs)
    output: OutputSpec = Field(default_factory=OutputSpec)
    threads: int = Field(default=1, ge=1)

    fundamental: FundamentalParams | None = None
    expand: ExpandParams | None = None
    radius: RadiusParams | None = None
    flc: FlcParams | None = None
    jet: JetParams | None = None
    extend: ExtendParams | None = None
    verify: VerifyParams | None = None

    @model_validator(mode="after")
    def _check(self) -> RunConfig:
        if self.command == "verify":
            if self.verify is None:
                self.verify = VerifyParams()
        elif getattr(self, self.command) is None:
            raise ValueError(f"command '{self.command}' needs a '{self.command}' block")
        if self.command in NEEDS_MODEL and self.model is None:
            raise ValueError(f"command '{self.command}' needs a 'model'")
        if self.extend is not None and self.model is not None:
            if len(self.extend.base) != self.model.d:
                raise ValueError(f"extend.base must have {self.model.d} components")
            if self.extend.axis >= self.model.d:
                raise ValueError(f"extend.axis must be below {self.model.d}")
        if self.flc is not None and self.model is not None:
            if not (self.model.r0 < self.flc.r_min and self.flc.r_max < self.model.r1):
                raise ValueError("flc radii must lie inside the model annulus")
        return self

    def block(self) -> BaseModel:
        """Parameter block of the selected command."""
        return getattr(self, self.command)

    def meta(self) -> dict[str, Any]:
        """Columns describing the run, repeated on every output row."""
        knobs = self.knobs.model_dump()
        return {"command": self.command, **{k: v for k, v in knobs.items() if v is not None}}


def read_document(path: Path) -> dict[str, Any]:
    """Parse a JSON or YAML document into a dict."""
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"{path} must contain a mapping")
    return data


def load_run_config(path: Path, overrides: dict[str, Any] | None = None) -> RunConfig:
    """Read a run config, apply flag overrides and validate."""
    data = read_document(path)
    if overrides:
        data = apply_overrides(data, overrides)
    return RunConfig.model_validate(data)


def apply_overrides(data: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    """Overlay dotted keys such as ``knobs.N`` onto a config document."""
    merged = dict(data)
    for dotted, value in overrides.items():
        if value is None:
            continue
        node = merged
        *parents, leaf = dotted.split(".")
        for key in parents:
            child = node.get(key)
            child = dict(child) if isinstance(child, dict) else {}
            node[key] = child
            node = child
        node[leaf] = value
    return merged

