"""Command-line interface.

Subcommands: ``solve``, ``scan-h``, ``density``, ``divergence-demo``,
``validate``.  Every run parameter can come from a JSON config file
(``--config``) or a flag; flags override the file.  The config schema is
strict: unknown keys abort before any computation.

Exit codes: 0 success, 1 numerical failure, 2 usage/config error.
"""

from __future__ import annotations

import dataclasses
import json
import math
import sys
from typing import Optional

import click
import numpy as np

from . import fourier_direct, models, validation
from .densities import Variable, analytic_coulomb_reference, default_momentum_grid, default_radius_grid, momentum_density, radial_density
from .errors import ConfigError, LagmeshError, SingularityError
from .quadrature import build_mesh
from .solver import ModelSpec, scan_h, solve

_KINETIC_VARIANTS = {
    "nonrelativistic": (models.NonrelativisticKinetic, ("mu",)),
    "quadratic": (models.QuadraticKinetic, ()),
    "semirelativistic": (models.SemirelativisticKinetic, ("m1", "m2")),
}
_POTENTIAL_VARIANTS = {
    "coulomb": (models.CoulombPotential, ("a",)),
    "linear": (models.LinearPotential, ("a",)),
    "cornell": (models.CornellPotential, ("kappa", "a", "c")),
    "gaussian": (models.GaussianPotential, ("a", "b")),
    "yukawa": (models.YukawaPotential, ("a", "mu")),
}

_CONFIG_KEYS = {"model", "n", "h", "l", "n_states", "output", "format"}


@dataclasses.dataclass
class RunConfig:
    model: object = "coulomb"  # builtin name or inline spec dict
    n: int = 50
    h: float = 0.5
    l: int = 0
    n_states: int = 1
    output: Optional[str] = None
    format: str = "csv"

    def validate(self) -> "RunConfig":
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigError(f"n must be a positive integer, got {self.n!r}")
        if not (isinstance(self.h, (int, float)) and self.h > 0):
            raise ConfigError(f"h must be positive, got {self.h!r}")
        if not isinstance(self.l, int) or self.l < 0:
            raise ConfigError(f"l must be a non-negative integer, got {self.l!r}")
        if not isinstance(self.n_states, int) or not 1 <= self.n_states <= self.n:
            raise ConfigError(f"n_states must be in [1, n], got {self.n_states!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.format!r}")
        return self

    def build_model(self) -> ModelSpec:
        if isinstance(self.model, str):
            try:
                return models.BUILTIN_MODELS[self.model](l=self.l)
            except KeyError:
                raise ConfigError(
                    f"unknown model {self.model!r}; builtins: "
                    + ", ".join(sorted(models.BUILTIN_MODELS))
                ) from None
        if not isinstance(self.model, dict):
            raise ConfigError("model must be a builtin name or an inline spec object")
        spec = dict(self.model)
        try:
            kin_spec = dict(spec.pop("kinetic"))
            pot_spec = dict(spec.pop("potential"))
        except KeyError as missing:
            raise ConfigError(f"inline model needs a {missing} section") from None
        if spec:
            raise ConfigError(f"unknown inline-model keys: {sorted(spec)}")
        kinetic = _build_variant(kin_spec, _KINETIC_VARIANTS, "kinetic")
        potential = _build_variant(pot_spec, _POTENTIAL_VARIANTS, "potential")
        return ModelSpec(kinetic=kinetic, potential=potential, l=self.l, label="custom")


def _build_variant(spec: dict, registry: dict, section: str):
    variant = spec.pop("variant", None)
    if variant not in registry:
        raise ConfigError(
            f"{section} variant must be one of {sorted(registry)}, got {variant!r}"
        )
    cls, fields = registry[variant]
    unknown = set(spec) - set(fields)
    if unknown:
        raise ConfigError(f"unknown {section} keys for {variant!r}: {sorted(unknown)}")
    missing = set(fields) - set(spec)
    if missing:
        raise ConfigError(f"missing {section} keys for {variant!r}: {sorted(missing)}")
    return cls(**{k: float(spec[k]) for k in fields})


def _load_config(config_path: Optional[str], **overrides) -> RunConfig:
    data = {}
    if config_path is not None:
        with open(config_path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    config = RunConfig()
    for key, value in data.items():
        setattr(config, key, value)
    for key, value in overrides.items():
        if value is not None:
            setattr(config, key, value)
    return config.validate()


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _write_text(path: Optional[str], text: str):
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


class _Fail(click.ClickException):
    """Numerical failure: exit code 1."""

    exit_code = 1


def _usage_error(message: str):
    raise click.UsageError(message)  # exit code 2


@click.group()
def main():
    """Two-body bound states in momentum space on a Gauss-Laguerre mesh."""


def _common_options(func):
    for option in reversed(
        (
            click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="JSON config file."),
            click.option("--model", default=None, help="Builtin model name (coulomb, fulcher, gaussian)."),
            click.option("--n", type=int, default=None, help="Mesh size."),
            click.option("--h", type=float, default=None, help="Momentum scale parameter."),
            click.option("--l", type=int, default=None, help="Angular momentum."),
            click.option("--output", type=click.Path(dir_okay=False), default=None, help="Output file (stdout when omitted)."),
        )
    ):
        func = option(func)
    return func


@main.command("solve")
@_common_options
@click.option("--states", "n_states", type=int, default=None, help="Number of lowest states.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None, help="Output format.")
def solve_cmd(config_path, model, n, h, l, output, n_states, fmt):
    """Solve a model and report (label, energy) plus coefficient vectors."""
    try:
        config = _load_config(
            config_path, model=model, n=n, h=h, l=l, n_states=n_states, output=output, format=fmt
        )
        spec = config.build_model()
    except ConfigError as exc:
        _usage_error(str(exc))
    try:
        mesh = build_mesh(config.n, config.h)
        result = solve(mesh, spec, config.n_states)
    except LagmeshError as exc:
        raise _Fail(str(exc))

    for label, energy in zip(result.labels, result.energies):
        click.echo(f"{label:>6s}  {energy:.9f}")

    if config.format == "json":
        payload = {
            "model": config.model if isinstance(config.model, str) else "custom",
            "n": config.n,
            "h": config.h,
            "l": config.l,
            "labels": result.labels,
            "energies": [float(e) for e in result.energies],
            "states": [[float(c) for c in row] for row in result.states],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        header = "label,energy," + ",".join(f"c{i+1}" for i in range(mesh.n))
        lines = [header]
        for label, energy, row in zip(result.labels, result.energies, result.states):
            lines.append(",".join([label, _fmt(energy)] + [_fmt(c) for c in row]))
        text = "\n".join(lines) + "\n"
    if config.output is not None:
        _write_text(config.output, text)


@main.command("scan-h")
@_common_options
@click.option("--state", type=int, default=0, help="0-based state index within the l block.")
@click.option("--h-min", type=float, required=True)
@click.option("--h-max", type=float, required=True)
@click.option("--points", type=int, required=True)
@click.option("--log-spacing/--linear", default=True, help="Grid spacing (default log).")
def scan_h_cmd(config_path, model, n, h, l, output, state, h_min, h_max, points, log_spacing):
    """Scan the scale parameter; CSV columns h,energy (empty on failure)."""
    try:
        config = _load_config(config_path, model=model, n=n, h=h, l=l, output=output)
        spec = config.build_model()
    except ConfigError as exc:
        _usage_error(str(exc))
    if not (0 < h_min < h_max):
        _usage_error(f"need 0 < h-min < h-max, got ({h_min}, {h_max})")
    if points < 1:
        _usage_error("points must be >= 1")
    if state < 0:
        _usage_error("state must be >= 0")
    grid = (
        np.geomspace(h_min, h_max, points) if log_spacing else np.linspace(h_min, h_max, points)
    )
    if points == 1:
        grid = np.array([h_min])
    try:
        results = scan_h(spec, config.n, grid, state)
    except LagmeshError as exc:
        raise _Fail(str(exc))
    lines = ["h,energy"]
    for point in results:
        lines.append(f"{_fmt(point.h)},{'' if point.energy is None else _fmt(point.energy)}")
    _write_text(config.output, "\n".join(lines) + "\n")


@main.command("density")
@_common_options
@click.option("--state", type=int, default=0, help="0-based state index within the l block.")
@click.option(
    "--variable",
    type=click.Choice(["momentum", "radius"]),
    default="momentum",
    help="Density variable.",
)
@click.option("--grid-max", type=float, default=None, help="Grid upper end (default heuristic).")
@click.option("--grid-points", type=int, default=400, help="Number of grid points.")
@click.option("--with-analytic", is_flag=True, help="Add the closed-form column (coulomb only).")
def density_cmd(
    config_path, model, n, h, l, output, state, variable, grid_max, grid_points, with_analytic
):
    """Emit a sampled density curve as CSV: x,density[,analytic]."""
    try:
        config = _load_config(config_path, model=model, n=n, h=h, l=l, output=output)
        spec = config.build_model()
    except ConfigError as exc:
        _usage_error(str(exc))
    if state < 0:
        _usage_error("state must be >= 0")
    if grid_points < 2:
        _usage_error("grid-points must be >= 2")
    var = Variable(variable)
    try:
        mesh = build_mesh(config.n, config.h)
        result = solve(mesh, spec, state + 1)
        if grid_max is not None:
            if grid_max <= 0:
                _usage_error("grid-max must be positive")
            grid = np.linspace(0.0, grid_max, grid_points)
        elif var is Variable.MOMENTUM:
            grid = default_momentum_grid(mesh, grid_points)
        else:
            grid = default_radius_grid(mesh, grid_points)
        if var is Variable.MOMENTUM:
            curve = momentum_density(result, state, grid)
        else:
            curve = radial_density(result, state, grid)
    except LagmeshError as exc:
        raise _Fail(str(exc))

    analytic = None
    if with_analytic:
        label = result.labels[state]
        if config.model != "coulomb" or label not in ("1S", "2S", "1P"):
            _usage_error(
                "--with-analytic is only available for the coulomb model states 1S, 2S, 1P"
            )
        analytic = analytic_coulomb_reference(label, var, grid)

    if analytic is None:
        lines = ["x,density"]
        for x, v in zip(curve.grid, curve.values):
            lines.append(f"{_fmt(x)},{_fmt(v)}")
    else:
        lines = ["x,density,analytic"]
        for x, v, a in zip(curve.grid, curve.values, analytic.values):
            lines.append(f"{_fmt(x)},{_fmt(v)},{_fmt(a)}")
    _write_text(config.output, "\n".join(lines) + "\n")


@main.command("divergence-demo")
@click.option("--n", type=int, required=True, help="Mesh size (>= 2).")
@click.option("--h", type=float, default=0.5, help="Momentum scale parameter.")
@click.option("--l", type=int, default=0, help="Angular momentum.")
def divergence_demo(n, h, l):
    """Show the direct Coulomb matrix: finite off-diagonal, divergent diagonal."""
    if n < 2:
        _usage_error("n must be >= 2 (a 1x1 matrix has no off-diagonal part)")
    if h <= 0:
        _usage_error("h must be positive")
    if l < 0:
        _usage_error("l must be >= 0")
    try:
        mesh = build_mesh(n, h)
    except LagmeshError as exc:
        raise _Fail(str(exc))
    kernel = fourier_direct.coulomb_kernel(1.0, l)
    p = mesh.momenta
    lw = mesh.log_weights
    click.echo(
        f"Direct Coulomb potential matrix elements, n={n}, h={h}, l={l}"
    )
    click.echo(
        "V_ij = -(h/pi) sqrt(lambda_i lambda_j) Q_l((x_i^2+x_j^2)/(2 x_i x_j))"
    )
    width = 14
    for i in range(n):
        cells = []
        for j in range(n):
            if i == j:
                cells.append("DIVERGENT".rjust(width))
                continue
            vl = fourier_direct.kernel_value(kernel, p[i], p[j])
            element = (
                math.exp(3.0 * math.log(h) + 0.5 * (lw[i] + lw[j]))
                * mesh.nodes[i]
                * mesh.nodes[j]
                * vl
            )
            cells.append(f"{element:+.6e}".rjust(width))
        click.echo(" ".join(cells))
    click.echo("Diagonal elements diverge: the Q_l argument equals 1 at p = p'.")


@main.command("validate")
@click.argument("suite", type=click.Choice(["coulomb", "fulcher", "gaussian", "all"]))
def validate_cmd(suite):
    """Run a reference-data validation suite and report per-check deltas."""
    try:
        checks = validation.run_suite(suite)
    except LagmeshError as exc:
        raise _Fail(str(exc))
    failed = 0
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        failed += 0 if check.passed else 1
        click.echo(f"{status}  {check.name}: {check.detail}")
    click.echo(f"{len(checks) - failed}/{len(checks)} checks passed")
    if failed:
        raise _Fail(f"{failed} checks failed")


if __name__ == "__main__":
    main()
