"""Model catalog: kinematics, potentials, and the benchmark systems.

Kinetic forms are callables of p^2 and potential forms callables of r^2, so
both plug directly into the matrix builders.  The three built-in systems are
the ones used by the validation suite:

* ``coulomb``  -- two unit masses, pure Coulomb attraction, a.u.
* ``fulcher``  -- semirelativistic light meson with Cornell interaction, GeV
* ``gaussian`` -- two semirelativistic unit masses in a Gaussian well
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .solver import ModelSpec


@dataclass(frozen=True)
class NonrelativisticKinetic:
    """T(p^2) = p^2 / (2 mu) for reduced mass mu."""

    mu: float

    def __post_init__(self):
        if not self.mu > 0.0:
            raise DomainError(f"reduced mass must be positive, got {self.mu}")

    def __call__(self, p2):
        return p2 / (2.0 * self.mu)


@dataclass(frozen=True)
class QuadraticKinetic:
    """T(p^2) = p^2 (two unit masses in relative-motion units)."""

    def __call__(self, p2):
        return np.asarray(p2, dtype=np.float64) + 0.0


@dataclass(frozen=True)
class SemirelativisticKinetic:
    """T(p^2) = sqrt(p^2 + m1^2) + sqrt(p^2 + m2^2)."""

    m1: float
    m2: float

    def __post_init__(self):
        if not (self.m1 > 0.0 and self.m2 > 0.0):
            raise DomainError("masses must be positive")

    def __call__(self, p2):
        return np.sqrt(p2 + self.m1**2) + np.sqrt(p2 + self.m2**2)


@dataclass(frozen=True)
class CoulombPotential:
    """V(r^2) = -a / sqrt(r^2)."""

    a: float

    def __call__(self, r2):
        return -self.a / np.sqrt(r2)


@dataclass(frozen=True)
class LinearPotential:
    """V(r^2) = a sqrt(r^2)."""

    a: float

    def __call__(self, r2):
        return self.a * np.sqrt(r2)


@dataclass(frozen=True)
class CornellPotential:
    """V(r^2) = -kappa / r + a r + c with r = sqrt(r^2)."""

    kappa: float
    a: float
    c: float

    def __call__(self, r2):
        r = np.sqrt(r2)
        return -self.kappa / r + self.a * r + self.c


@dataclass(frozen=True)
class GaussianPotential:
    """V(r^2) = -a exp(-b^2 r^2)."""

    a: float
    b: float

    def __post_init__(self):
        if not self.b > 0.0:
            raise DomainError(f"Gaussian range parameter must be positive, got {self.b}")

    def __call__(self, r2):
        return -self.a * np.exp(-self.b**2 * r2)


@dataclass(frozen=True)
class YukawaPotential:
    """V(r^2) = -a exp(-mu r) / r with r = sqrt(r^2)."""

    a: float
    mu: float

    def __post_init__(self):
        if self.mu < 0.0:
            raise DomainError(f"screening mass must be >= 0, got {self.mu}")

    def __call__(self, r2):
        r = np.sqrt(r2)
        return -self.a * np.exp(-self.mu * r) / r


def coulomb_test_model(l: int = 0) -> ModelSpec:
    """Two unit-mass particles with unit Coulomb attraction: [p^2 - 1/r].

    Exact spectrum E_n = -1/(4 n^2) with n = n_r + l + 1 (arbitrary units).
    """
    return ModelSpec(
        kinetic=QuadraticKinetic(),
        potential=CoulombPotential(1.0),
        l=l,
        label="coulomb",
    )


# light-meson parameter set: masses in GeV, slope in GeV^2, offset in GeV
FULCHER_M = 0.150
FULCHER_KAPPA = 0.437
FULCHER_A = 0.203
FULCHER_C = -0.599


def fulcher_model(l: int = 0) -> ModelSpec:
    """Semirelativistic quark-antiquark system with Cornell interaction (GeV)."""
    return ModelSpec(
        kinetic=SemirelativisticKinetic(FULCHER_M, FULCHER_M),
        potential=CornellPotential(FULCHER_KAPPA, FULCHER_A, FULCHER_C),
        l=l,
        label="fulcher",
    )


def gaussian_comparison_model(l: int = 0) -> ModelSpec:
    """Two semirelativistic unit masses in a Gaussian well (a=3, b=1).

    Supports a single bound state with 0 < E < 2.
    """
    return ModelSpec(
        kinetic=SemirelativisticKinetic(1.0, 1.0),
        potential=GaussianPotential(3.0, 1.0),
        l=l,
        label="gaussian",
    )


def analytic_coulomb_energy(n_r: int, l: int) -> float:
    """E = -1/(4 n^2) with n = n_r + l + 1, for the ``coulomb`` model."""
    if n_r < 0 or l < 0:
        raise DomainError("quantum numbers must be >= 0")
    n = n_r + l + 1
    return -1.0 / (4.0 * n * n)


BUILTIN_MODELS = {
    "coulomb": coulomb_test_model,
    "fulcher": fulcher_model,
    "gaussian": gaussian_comparison_model,
}
