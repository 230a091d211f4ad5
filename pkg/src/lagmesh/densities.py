"""Probability densities reconstructed from solved coefficient vectors.

Momentum side: P(p) = (1/h) (sum_i C_i f_i(p/h))^2.

Position side: the basis functions transform in closed form under the
spherical Bessel transform, giving

    R(r) = (2 h^3 / pi) (sum_i C_i sqrt(lambda_i) x_i r j_l(h x_i r))^2.

Both are perfect squares, so the curves are nonnegative by construction.
The position formula inherits the mesh resolution: far beyond the radius the
mesh can resolve, it develops small positive oscillation artifacts that
shrink as N grows (see the validation notes in the README).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .basis import LagrangeBasis
from .errors import DomainError
from .quadrature import Mesh
from .solver import SolveResult


class Variable(enum.Enum):
    MOMENTUM = "momentum"
    RADIUS = "radius"


@dataclass(frozen=True)
class DensityCurve:
    """A sampled probability density in either variable."""

    variable: Variable
    grid: np.ndarray
    values: np.ndarray
    state_label: str
    mesh_n: int
    h: float

    def __post_init__(self):
        self.grid.setflags(write=False)
        self.values.setflags(write=False)


def _checked_grid(grid) -> np.ndarray:
    g = np.asarray(grid, dtype=np.float64)
    if g.ndim != 1 or g.size == 0:
        raise DomainError("grid must be a non-empty 1-d array")
    if np.any(g < 0.0):
        raise DomainError("grid points must be >= 0")
    return g


def momentum_density(result: SolveResult, state_index: int, grid) -> DensityCurve:
    """P(p) on the grid for one solved state."""
    g = _checked_grid(grid)
    c = result.states[state_index]
    amplitude = LagrangeBasis(result.mesh).eval_f_batch(c, g / result.mesh.h)
    values = amplitude * amplitude / result.mesh.h
    return DensityCurve(
        Variable.MOMENTUM, g, values, result.labels[state_index], result.mesh.n, result.mesh.h
    )


def radial_density(result: SolveResult, state_index: int, grid) -> DensityCurve:
    """R(r) on the grid for one solved state."""
    g = _checked_grid(grid)
    mesh = result.mesh
    c = result.states[state_index]
    amplitudes = c * np.exp(0.5 * mesh.log_weights) * mesh.nodes
    series = kernels.bessel_series(amplitudes, mesh.momenta, result.l, g)
    values = (2.0 * mesh.h**3 / math.pi) * (g * series) ** 2
    return DensityCurve(
        Variable.RADIUS, g, values, result.labels[state_index], mesh.n, mesh.h
    )


# Closed-form densities of the three lowest coulomb-model states
# ([p^2 - 1/r] psi = E psi, i.e. reduced mass 1/2 and unit strength, so the
# length scale of the wave functions is 2).  All six integrate to 1.

_P_AMPLITUDES = {
    "1S": lambda p: (8.0 / math.sqrt(math.pi)) * 2.0 * p / (1.0 + 4.0 * p**2) ** 2,
    "2S": lambda p: 2.0**5 * math.sqrt(2.0 / math.pi) * 2.0 * p * (1.0 - 16.0 * p**2) / (1.0 + 16.0 * p**2) ** 3,
    "1P": lambda p: 2.0**7 * math.sqrt(2.0 / (3.0 * math.pi)) * 4.0 * p**2 / (1.0 + 16.0 * p**2) ** 3,
}

_R_AMPLITUDES = {
    "1S": lambda r: np.exp(-r / 2.0) / math.sqrt(2.0),
    "2S": lambda r: 0.25 * (1.0 - r / 4.0) * np.exp(-r / 4.0),
    "1P": lambda r: r * np.exp(-r / 4.0) / (16.0 * math.sqrt(3.0)),
}


def analytic_coulomb_reference(state: str, variable: Variable, grid) -> DensityCurve:
    """Exact density of the coulomb-model state ``"1S"``, ``"2S"`` or ``"1P"``."""
    g = _checked_grid(grid)
    if state not in _P_AMPLITUDES:
        raise DomainError(f"no analytic reference for state {state!r}")
    if variable is Variable.MOMENTUM:
        values = _P_AMPLITUDES[state](g) ** 2
    else:
        values = _R_AMPLITUDES[state](g) ** 2 * g**2
    return DensityCurve(variable, g, np.asarray(values, dtype=np.float64), state, 0, 0.0)


def default_momentum_grid(mesh: Mesh, points: int = 400) -> np.ndarray:
    """Uniform grid on [0, 3 h sqrt(x_N)], wide enough for visible support."""
    return np.linspace(0.0, 3.0 * mesh.h * math.sqrt(mesh.nodes[-1]), points)


def default_radius_grid(mesh: Mesh, points: int = 400) -> np.ndarray:
    """Uniform grid on [0, min(40 / (h x_1), 50)]."""
    return np.linspace(0.0, min(40.0 / (mesh.h * mesh.nodes[0]), 50.0), points)
