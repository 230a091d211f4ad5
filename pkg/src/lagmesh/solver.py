"""Hamiltonian assembly and the symmetric eigenproblem.

``H = diag(T(h^2 x_i^2)) + S V(D^2) S^T`` on the Lagrange basis; states come
out as real coefficient vectors of unit Euclidean norm.  Mesh sizes of a few
hundred keep the dense solve instantaneous, so no iterative machinery is
used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, LagmeshError, ModelDomainError
from .operators import (
    OperatorMatrix,
    Role,
    kinetic_matrix,
    potential_matrix,
    r_squared_matrix,
    spectral_decompose,
)
from .quadrature import Mesh, build_mesh

SPECTROSCOPIC_LETTERS = "SPDFGHIKLMNOQRTUV"


def spectroscopic_label(state_index: int, l: int) -> str:
    """Label for the k-th state (0-based) of angular momentum l: 1S, 2S, 1P..."""
    letter = SPECTROSCOPIC_LETTERS[l] if l < len(SPECTROSCOPIC_LETTERS) else f"(l={l})"
    return f"{state_index + 1}{letter}"


@dataclass(frozen=True)
class ModelSpec:
    """One eigenproblem: kinetic T(p^2), potential V(r^2), angular momentum l."""

    kinetic: Callable[[np.ndarray], np.ndarray]
    potential: Callable[[np.ndarray], np.ndarray]
    l: int
    label: str = "model"

    def __post_init__(self):
        if self.l < 0:
            raise DomainError(f"angular momentum must be >= 0, got {self.l}")


@dataclass(frozen=True)
class SolveResult:
    """Eigenenergies with unit-norm coefficient vectors and spectroscopic labels.

    ``states[k]`` holds the N coefficients of the k-th state; the sign is
    fixed so the largest-magnitude component is positive, making output
    deterministic.
    """

    energies: np.ndarray
    states: np.ndarray
    labels: List[str]
    mesh: Mesh
    l: int

    def __post_init__(self):
        self.energies.setflags(write=False)
        self.states.setflags(write=False)


def assemble_hamiltonian(mesh: Mesh, model: ModelSpec) -> OperatorMatrix:
    """Kinetic plus spectral-calculus potential matrix for the model."""
    try:
        kin = kinetic_matrix(mesh, model.kinetic)
        decomp = spectral_decompose(r_squared_matrix(mesh, model.l))
        pot = potential_matrix(decomp, model.potential)
    except ModelDomainError as exc:
        raise ModelDomainError(f"model {model.label!r}: {exc}") from exc
    return OperatorMatrix(kin.data + pot.data, Role.HAMILTONIAN, mesh.n, mesh.h)


def solve(mesh: Mesh, model: ModelSpec, n_states: int) -> SolveResult:
    """Lowest ``n_states`` eigenpairs of the model on the given mesh."""
    if not 1 <= n_states <= mesh.n:
        raise DomainError(f"n_states must be in [1, {mesh.n}], got {n_states}")
    hamiltonian = assemble_hamiltonian(mesh, model)
    try:
        energies, vectors = np.linalg.eigh(hamiltonian.data)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    states = vectors[:, :n_states].T.copy()
    for k in range(n_states):
        if states[k, np.argmax(np.abs(states[k]))] < 0.0:
            states[k] = -states[k]
    labels = [spectroscopic_label(k, model.l) for k in range(n_states)]
    return SolveResult(energies[:n_states].copy(), states, labels, mesh, model.l)


def momentum_expectation(result: SolveResult, state_index: int, func: Callable) -> float:
    """<g(p^2)> by the node-collapse shortcut: sum_k C_k^2 g(h^2 x_k^2)."""
    c = result.states[state_index]
    p2 = result.mesh.momenta**2
    values = np.asarray(func(p2), dtype=np.float64)
    if values.shape != p2.shape:
        values = np.array([float(func(v)) for v in p2])
    return float(np.dot(c * c, values))


def matrix_expectation(result: SolveResult, state_index: int, matrix: OperatorMatrix) -> float:
    """<O> = C^T M C for a position-observable matrix of matching dimension."""
    c = result.states[state_index]
    if matrix.data.shape != (c.size, c.size):
        raise DomainError(
            f"matrix of shape {matrix.data.shape} does not match state of size {c.size}"
        )
    return float(c @ matrix.data @ c)


@dataclass(frozen=True)
class ScanPoint:
    """One point of an h-scan; ``energy`` is None when the solve failed."""

    h: float
    energy: Optional[float]
    error: Optional[str] = None


def scan_h(
    model: ModelSpec, n: int, h_grid: Sequence[float], state_index: int = 0
) -> List[ScanPoint]:
    """Solve the model at every h in the grid (legitimately failing points
    are recorded, not fatal).  Nodes and weights are shared across the scan
    since they depend only on n."""
    if len(h_grid) == 0:
        raise DomainError("h grid must not be empty")
    base = build_mesh(n, float(h_grid[0]))
    points: List[ScanPoint] = []
    for h in h_grid:
        try:
            result = solve(base.with_h(float(h)), model, state_index + 1)
            points.append(ScanPoint(float(h), float(result.energies[state_index])))
        except LagmeshError as exc:
            points.append(ScanPoint(float(h), None, str(exc)))
    return points
