"""Gauss-Laguerre mesh construction.

The mesh is the set of N roots of the degree-N Laguerre polynomial, and the
weights are rescaled so that ``integral_0^inf g(x) dx ~ sum_k lambda_k g(x_k)``
is exact for g = (polynomial of degree <= 2N-1) * exp(-x).  The rescaled
weights satisfy ``lambda_k = exp(x_k) w_k`` with w_k the textbook
Gauss-Laguerre weights; they are computed and stored in log form,

    ln lambda_k = x_k - ln x_k + 2 ln Gamma(N+1) - sum_{j != k} 2 ln|x_k - x_j|,

which stays finite for any mesh size (the naive product overflows long
before N = 300).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import kernels
from .errors import ConvergenceError, DomainError

NEWTON_REL_TOL = 1e-14
NEWTON_MAX_ITER = 50


@dataclass(frozen=True)
class Mesh:
    """Immutable Gauss-Laguerre mesh of size ``n`` with momentum scale ``h``.

    Safe to share across threads; all arrays are frozen after construction.
    """

    n: int
    h: float
    nodes: np.ndarray
    log_weights: np.ndarray

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.log_weights.setflags(write=False)

    @property
    def weights(self) -> np.ndarray:
        """Rescaled weights lambda_k (moderate magnitudes at any n)."""
        return np.exp(self.log_weights)

    @property
    def momenta(self) -> np.ndarray:
        """Physical momenta h * x_k carried by the mesh points."""
        return self.h * self.nodes

    def with_h(self, h: float) -> "Mesh":
        """Same nodes and weights under a different momentum scale."""
        if not (h > 0.0 and math.isfinite(h)):
            raise DomainError(f"scale parameter must be positive, got {h}")
        return Mesh(self.n, float(h), self.nodes, self.log_weights)


def build_mesh(n: int, h: float) -> Mesh:
    """Build the n-point mesh: nodes from the symmetric tridiagonal Jacobi
    matrix of the Laguerre recurrence, polished by Newton iteration, plus
    log-domain weights.

    Raises:
        DomainError: n < 1 or h <= 0.
        ConvergenceError: Newton polish failed (should not happen for the
            eigenvalue starting points).
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"mesh size must be a positive integer, got {n!r}")
    if not (isinstance(h, (int, float, np.floating)) and h > 0.0 and math.isfinite(h)):
        raise DomainError(f"scale parameter must be positive, got {h!r}")

    if n == 1:
        nodes = np.array([1.0])
    else:
        diag = 2.0 * np.arange(n) + 1.0
        off = np.arange(1.0, n)
        nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
        nodes, converged = kernels.polish_laguerre_roots(
            n, nodes, NEWTON_REL_TOL, NEWTON_MAX_ITER
        )
        if not converged:
            raise ConvergenceError(f"Newton polish did not converge for n={n}")

    if not (np.all(nodes > 0.0) and np.all(np.diff(nodes) > 0.0)):
        raise ConvergenceError(f"mesh nodes not strictly increasing for n={n}")

    log_weights = kernels.pairwise_log_weights(nodes, 2.0 * math.lgamma(n + 1))
    if not np.all(np.isfinite(log_weights)):
        raise ConvergenceError(f"non-finite log-weights for n={n}")
    return Mesh(int(n), float(h), nodes, log_weights)


def quadrature_sum(mesh: Mesh, values_at_nodes) -> float:
    """sum_k lambda_k * values[k].

    The caller is responsible for pre-damped integrands: every integrand in
    this package carries the e^{-x} decay through the Lagrange functions, so
    plain values are safe to sum.
    """
    values = np.asarray(values_at_nodes, dtype=np.float64)
    if values.shape != (mesh.n,):
        raise DomainError(
            f"expected {mesh.n} node values, got array of shape {values.shape}"
        )
    return float(np.dot(mesh.weights, values))
