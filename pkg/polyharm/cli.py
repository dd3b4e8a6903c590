"""Command-line interface for polyharm."""

from __future__ import annotations

import itertools
import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
import numpy as np
import yaml
from pydantic import ValidationError
from rich.table import Table

from polyharm import __version__
from polyharm.config.run import FundamentalParams, RunConfig, apply_overrides, read_document
from polyharm.config.settings import get_settings
from polyharm.console import configure_logging, console
from polyharm.core.errors import CapabilityError, ConfigurationError, InvalidInputError, PolyharmError
from polyharm.core.fundamental import FundamentalFunction, Strategy, eval_fundamental
from polyharm.core.taylor import convergence_radius, taylor_expand
from polyharm.extension import ModelExtension, default_v0, dump_series, log_jet, outer_radius
from polyharm.models import build_model
from polyharm.models.spec import to_complex
from polyharm.output import check_writable, write_artifact
from polyharm.spherical.transform import flc as flc_value
from polyharm.verify import get_default_checks, run_checks

logger = logging.getLogger(__name__)

Rows = list[dict[str, Any]]
Handler = Callable[[RunConfig], tuple[Rows, dict[str, Any]]]


class RunFailed(Exception):
    """Raised by a handler to request exit 1 after its artifact is written."""
    pass


def run_options(func: Callable) -> Callable:
    """Options shared by every subcommand."""
    options = [
        click.option("--config", "config_path", type=click.Path(path_type=Path), help="Run config (JSON or YAML)"),
        click.option("--model", "model_path", type=click.Path(path_type=Path), help="Model file replacing config.model"),
        click.option("--out", "out", type=click.Path(path_type=Path), help="Output path (stdout when omitted)"),
        click.option("--format", "fmt", type=click.Choice(["csv", "json"]), help="Output format"),
        click.option("--threads", type=int, help="Worker threads for grid evaluation"),
        click.option("--tol", type=float, help="Tolerance knob"),
        click.option("--N", "N", type=int, help="Number of log-derivatives or Taylor coefficients"),
        click.option("--J", "J", type=int, help="Largest extension coefficient index"),
        click.option("--K-max", "K_max", type=int, help="Largest harmonic degree"),
        click.option(
            "--quad-degree", "--quad-nodes", "quad_degree", type=int, help="Band limit resolved by the sphere quadrature"
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _error_list(exc: ValidationError) -> list[dict[str, Any]]:
    return [
        {"loc": [str(part) for part in err["loc"]], "msg": err["msg"], "type": err["type"]}
        for err in exc.errors()
    ]


def _exit(code: int, document: Any) -> None:
    click.echo(json.dumps(document, indent=2, sort_keys=True))
    sys.exit(code)


def load_config(command: str, options: dict[str, Any]) -> RunConfig:
    """Config file, then model file, then flag overrides, then validation."""
    config_path = options.get("config_path")
    data: dict[str, Any] = read_document(config_path) if config_path else {}
    if options.get("model_path"):
        data["model"] = read_document(options["model_path"])
    overrides = {
        "command": command,
        "output.path": str(options["out"]) if options.get("out") else None,
        "output.format": options.get("fmt"),
        "threads": options.get("threads"),
        "knobs.tol": options.get("tol"),
        "knobs.N": options.get("N"),
        "knobs.J": options.get("J"),
        "knobs.K_max": options.get("K_max"),
        "knobs.quad_degree": options.get("quad_degree"),
    }
    return RunConfig.model_validate(apply_overrides(data, overrides))


def execute(command: str, handler: Handler, options: dict[str, Any]) -> None:
    """Run one subcommand and map failures onto exit codes 1 and 2."""
    try:
        config = load_config(command, options)
        check_writable(config.output.path)
    except ValidationError as exc:
        _exit(2, _error_list(exc))
    except ConfigurationError as exc:
        _exit(2, [{"loc": [exc.operation or command], "msg": exc.message, "type": "configuration"}])
    except (OSError, yaml.YAMLError, ValueError) as exc:
        _exit(2, [{"loc": [command], "msg": str(exc), "type": type(exc).__name__}])

    try:
        rows, meta = handler(config)
        if rows is not None:
            write_artifact(rows, path=config.output.path, fmt=config.output.format, meta=meta)
    except ValidationError as exc:
        _exit(2, _error_list(exc))
    except ConfigurationError as exc:
        _exit(2, [{"loc": [exc.operation or command], "msg": exc.message, "type": "configuration"}])
    except PolyharmError as exc:
        _exit(1, exc.payload())
    except RunFailed:
        sys.exit(1)
    except Exception as exc:
        logger.exception("%s failed", command)
        _exit(1, {"error": type(exc).__name__, "operation": command, "message": str(exc), "details": {}})
    logger.info("%s finished", command)


def _degree(config: RunConfig) -> int | None:
    return config.knobs.quad_degree


def _strategy_values(
    phi: FundamentalFunction,
    z: np.ndarray,
    params: FundamentalParams,
    tol: float | None,
) -> dict[str, np.ndarray | None]:
    values: dict[str, np.ndarray | None] = {}
    for strategy in Strategy:
        try:
            values[str(strategy)] = np.asarray(
                eval_fundamental(phi, z, strategy, contour_radius=params.contour_radius, tol=tol)
            )
        except InvalidInputError:
            # no closed form for this multiplicity pattern
            values[str(strategy)] = None
    return values


def fundamental_rows(config: RunConfig) -> tuple[Rows, dict[str, Any]]:
    """Phi over the grid by every strategy, with their max pairwise deviation."""
    params = config.fundamental
    phi = FundamentalFunction.from_exponents([to_complex(v) for v in params.exponents])
    z = np.array([complex(x, y) for y in params.im.values() for x in params.re.values()])
    values = _strategy_values(phi, z, params, config.knobs.tol)

    rows = []
    for i, point in enumerate(z):
        row: dict[str, Any] = {"z": complex(point)}
        available = []
        for name, column in values.items():
            row[name] = complex(column[i]) if column is not None else None
            if column is not None:
                available.append(complex(column[i]))
        row["max_deviation"] = max(
            (abs(a - b) for a, b in itertools.combinations(available, 2)),
            default=0.0,
        )
        rows.append(row)
    meta = {**config.meta(), "n": phi.n, "closed_form": str(phi.closed_form)}
    return rows, meta


def expand_rows(config: RunConfig) -> tuple[Rows, dict[str, Any]]:
    """Generalized Taylor coefficients, radius analytics and optional partial sums."""
    params = config.expand
    N = config.knobs.N or get_settings().N
    exponents = params.exponents.to_sequence()
    series = taylor_expand(params.function.to_handle(), exponents, params.x0, N)
    lams = exponents.prefix(N)

    rows: Rows = [
        {"kind": "coeff", "n": n, "x": None, "lambda": lams[n], "value": a}
        for n, a in enumerate(series.coeffs)
    ]
    rows += [
        {"kind": "partial_sum", "n": N, "x": x, "value": series.partial_sum(x)}
        for x in params.points
    ]
    meta = {
        **config.meta(),
        "N": N,
        "x0": series.x0,
        "radius": series.radius,
        "R_star": series.R_star,
        "sigma": series.sigma,
    }
    return rows, meta


def radius_rows(config: RunConfig) -> tuple[Rows, dict[str, Any]]:
    params = config.radius
    coeffs = [to_complex(c) for c in params.coeffs]
    radius = convergence_radius(coeffs, params.beta)
    return [{"count": len(coeffs), "beta": params.beta, "radius": radius}], config.meta()


def flc_rows(config: RunConfig) -> tuple[Rows, dict[str, Any]]:
    """f_{k,l}(r) on the radial grid, beside the closed form when the family has one."""
    params = config.flc
    model = build_model(config.model)
    radii = np.linspace(params.r_min, params.r_max, params.count) if params.count > 1 else [params.r_min]

    rows = []
    for r in radii:
        value = flc_value(
            model, params.k, params.l, float(r), d=model.d, r0=model.r0, r1=model.r1, degree=_degree(config)
        )
        try:
            exact: complex | None = model.exact_flc(params.k, params.l, float(r))
        except CapabilityError:
            exact = None
        rows.append({"r": float(r), "value": value, "exact": exact})
    meta = {**config.meta(), "family": model.family, "d": model.d, "k": params.k, "l": params.l}
    return rows, meta


def jet_rows(config: RunConfig) -> tuple[Rows, dict[str, Any]]:
    params = config.jet
    model = build_model(config.model)
    N = config.knobs.N or get_settings().N
    v0 = params.v0
    if v0 is None:
        v0 = default_v0(model.r0, outer_radius(model.r1, model.tau_claimed))
    jet = log_jet(model, params.k, params.l, v0, N, degree=_degree(config))
    lams = jet.exponents.prefix(N)
    rows = [{"n": n, "lambda": lams[n], "deriv": c} for n, c in enumerate(jet.derivs)]
    meta = {
        **config.meta(),
        "k": jet.k,
        "l": jet.l,
        "d": jet.d,
        "v0": jet.v0,
        "tau": jet.tau,
        "guaranteed_radius": jet.guaranteed_radius(),
    }
    return rows, meta


def extend_rows(config: RunConfig) -> tuple[Rows, dict[str, Any]]:
    """F over a complex slice with Lie-annulus membership columns."""
    params = config.extend
    model = build_model(config.model)
    extension = ModelExtension.build(
        model,
        K_max=config.knobs.K_max,
        J=config.knobs.J,
        N=config.knobs.N,
        v0=params.v0,
        degree=_degree(config),
        threads=config.threads,
        tail_tol=config.knobs.tol,
    )
    if params.series_out is not None:
        dump_series(list(extension.series), params.series_out)

    points, offsets = params.points()
    values = extension.evaluate_many(points, threads=config.threads, skip_outside=True)
    rows = []
    for offset, point, value in zip(offsets, points, values):
        member = extension.membership(point)
        rows.append(
            {
                "x": offset.real,
                "y": offset.imag,
                "value": complex(value),
                "L_minus": member.L_minus,
                "L_plus": member.L_plus,
                "cut": member.on_cut,
                "inside": member.inside,
            }
        )
    meta = {**config.meta(), **extension.to_dict()}
    return rows, meta


def verify_rows(config: RunConfig) -> tuple[None, dict[str, Any]]:
    """Run the acceptance checks; the report replaces the row artifact."""
    params = config.verify
    registry = get_default_checks()
    unknown = [name for name in params.checks or [] if registry.get(name) is None]
    if unknown:
        raise ConfigurationError(f"Unknown checks: {', '.join(unknown)}", operation="verify")

    run = run_checks(registry, seed=params.seed, names=params.checks)
    if config.output.path is not None:
        run.save(config.output.path)
    else:
        click.echo(json.dumps(run.to_dict(), indent=2, sort_keys=True))

    table = Table(title="polyharm verify")
    table.add_column("check")
    table.add_column("witnesses", justify="right")
    table.add_column("failed", justify="right")
    for name, reports in run.results.items():
        failed = sum(not r.passed for r in reports)
        table.add_row(name, str(len(reports)), f"[red]{failed}[/red]" if failed else "0")
    console.print(table)

    if not run.passed:
        for report in run.failures():
            logger.error("%s failed: residual=%g note=%s", report.theorem_id, report.residual, report.note)
        raise RunFailed()
    return None, {}


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Log level (defaults to the configured one)",
)
@click.version_option(version=__version__)
def main(log_level: str | None) -> None:
    """polyharm - fundamental functions, generalized Taylor series and polyharmonic continuation."""
    configure_logging(log_level or get_settings().log_level)


@main.command()
@run_options
def fundamental(**options: Any) -> None:
    """Tabulate Phi over a complex grid with every strategy."""
    execute("fundamental", fundamental_rows, options)


@main.command()
@run_options
def expand(**options: Any) -> None:
    """Generalized Taylor coefficients and convergence radius of a function."""
    execute("expand", expand_rows, options)


@main.command()
@run_options
def radius(**options: Any) -> None:
    """Convergence radius of supplied coefficients."""
    execute("radius", radius_rows, options)


@main.command()
@run_options
def flc(**options: Any) -> None:
    """Fourier-Laplace coefficients of a model over a radial grid."""
    execute("flc", flc_rows, options)


@main.command()
@run_options
def jet(**options: Any) -> None:
    """Log-variable jet of one Fourier-Laplace coefficient."""
    execute("jet", jet_rows, options)


@main.command()
@run_options
def extend(**options: Any) -> None:
    """Evaluate the complexified extension over a 2-D slice of C^d."""
    execute("extend", extend_rows, options)


@main.command()
@run_options
def verify(**options: Any) -> None:
    """Run every acceptance check and write the witness report."""
    execute("verify", verify_rows, options)


if __name__ == "__main__":
    main()
