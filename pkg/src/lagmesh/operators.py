"""Operator matrices on the Lagrange basis.

The kinetic matrix is diagonal at the Gauss level, ``T(h^2 x_i^2) delta_ij``.
Position-dependent operators enter through the squared-radius matrix R^2,
whose elements have a closed form on the regularized basis; a function
V(r^2) is then applied by the spectral calculus

    R^2 = S D^2 S^T   =>   V_{R^2} = S V(D^2) S^T,

with D^2 the diagonal eigenvalue matrix and S orthogonal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DegeneracyError, DomainError, ModelDomainError
from .quadrature import Mesh


class Role(enum.Enum):
    KINETIC = "kinetic"
    R_SQUARED = "r_squared"
    POTENTIAL = "potential"
    HAMILTONIAN = "hamiltonian"
    OBSERVABLE = "observable"


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense symmetric N x N matrix tagged with its role in the eigenproblem."""

    data: np.ndarray
    role: Role
    mesh_n: int
    h: float

    def __post_init__(self):
        self.data.setflags(write=False)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigendecomposition of the squared-radius matrix.

    ``eigenvalues`` ascending; ``transition`` holds the eigenvectors as
    columns, so reconstruction is ``S @ diag(eigenvalues) @ S.T``.
    """

    eigenvalues: np.ndarray
    transition: np.ndarray
    mesh_n: int
    h: float

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.transition.setflags(write=False)


def _evaluate(func: Callable, points: np.ndarray, what: str) -> np.ndarray:
    """Evaluate a model function on an array, tolerating scalar-only callables,
    and reject non-finite values naming the offending point."""
    try:
        values = np.asarray(func(points), dtype=np.float64)
        if values.shape != points.shape:
            raise TypeError
    except (TypeError, ValueError):
        values = np.array([float(func(p)) for p in points])
    bad = ~np.isfinite(values)
    if np.any(bad):
        k = int(np.argmax(bad))
        raise ModelDomainError(
            f"{what} returned a non-finite value {values[k]!r} at point {points[k]!r}"
        )
    return values


def kinetic_matrix(mesh: Mesh, kinetic: Callable[[np.ndarray], np.ndarray]) -> OperatorMatrix:
    """Diagonal kinetic matrix T(h^2 x_i^2) delta_ij."""
    values = _evaluate(kinetic, mesh.momenta**2, "kinetic function")
    return OperatorMatrix(np.diag(values), Role.KINETIC, mesh.n, mesh.h)


def r_squared_matrix(mesh: Mesh, l: int, *, centrifugal_power: int = 2) -> OperatorMatrix:
    """Squared-radius matrix on the basis, including the centrifugal diagonal.

    The centrifugal term is l(l+1)/x_i^2; the alternative 1/x_i scaling is
    selectable for diagnostics only and fails the l=1 Coulomb benchmark (see
    README).
    """
    if l < 0:
        raise DomainError(f"angular momentum must be >= 0, got {l}")
    if centrifugal_power not in (1, 2):
        raise DomainError("centrifugal_power must be 1 or 2")
    x = mesh.nodes
    n = mesh.n
    xi = x[:, None]
    xj = x[None, :]
    idx = np.arange(n)
    sign = np.where((idx[:, None] - idx[None, :]) % 2 == 0, 1.0, -1.0)
    with np.errstate(divide="ignore"):
        off = sign * (xi * xj) ** -0.5 * (xi + xj) / np.where(xi == xj, 1.0, xi - xj) ** 2
    diag = (4.0 + (4.0 * n + 2.0) * x - x**2) / (12.0 * x**2)
    diag = diag + l * (l + 1.0) / x**centrifugal_power
    data = np.where(np.eye(n, dtype=bool), np.diag(diag), off) / mesh.h**2
    return OperatorMatrix(data, Role.R_SQUARED, n, mesh.h)


def spectral_decompose(matrix: OperatorMatrix) -> SpectralDecomposition:
    """Full symmetric eigendecomposition of the squared-radius matrix.

    Raises:
        DegeneracyError: some eigenvalue is <= 0 (never clamped silently;
            a non-positive r^2 eigenvalue would corrupt any V(r^2) built on
            top of it).
        ConvergenceError: the eigensolver failed.
    """
    if matrix.role is not Role.R_SQUARED:
        raise DomainError(f"expected an R_SQUARED matrix, got role {matrix.role}")
    try:
        eigenvalues, transition = np.linalg.eigh(matrix.data)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigendecomposition failed: {exc}") from exc
    if eigenvalues[0] <= 0.0:
        raise DegeneracyError(
            f"squared-radius matrix has a non-positive eigenvalue {eigenvalues[0]!r}"
        )
    return SpectralDecomposition(eigenvalues, transition, matrix.mesh_n, matrix.h)


def _spectral_apply(
    decomp: SpectralDecomposition, func: Callable, role: Role, what: str
) -> OperatorMatrix:
    values = _evaluate(func, decomp.eigenvalues, what)
    s = decomp.transition
    data = (s * values) @ s.T
    data = 0.5 * (data + data.T)  # kill roundoff asymmetry from the matmul
    return OperatorMatrix(data, role, decomp.mesh_n, decomp.h)


def potential_matrix(
    decomp: SpectralDecomposition, potential: Callable[[np.ndarray], np.ndarray]
) -> OperatorMatrix:
    """V_{R^2} = S V(D^2) S^T for a radial potential V(r^2)."""
    return _spectral_apply(decomp, potential, Role.POTENTIAL, "potential function")


def observable_matrix(
    decomp: SpectralDecomposition, observable: Callable[[np.ndarray], np.ndarray]
) -> OperatorMatrix:
    """Same spectral calculus for a position observable O(r^2), e.g.
    O = sqrt for <r> or O = V for the potential-energy expectation."""
    return _spectral_apply(decomp, observable, Role.OBSERVABLE, "observable function")
