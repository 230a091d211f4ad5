"""Regularized Lagrange functions on the Gauss-Laguerre mesh.

The i-th basis function (1-based index i in the classical notation) is

    f_i(x) = (-1)^i x_i^{-1/2} x (x - x_i)^{-1} L_N(x) e^{-x/2},

which vanishes at the origin and at every mesh point except x_i, where it
takes the value lambda_i^{-1/2} (the cardinality property).  The public API
uses 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DomainError
from .quadrature import Mesh

# relative half-width of the "at the node" window; within it the removable
# singularity is resolved by the exact cardinality value
NODE_WINDOW = 1e-8


@dataclass(frozen=True)
class LagrangeBasis:
    """Evaluator for the N regularized Lagrange functions of a mesh.

    Immutable after construction; concurrent evaluation is safe.
    """

    mesh: Mesh
    inv_sqrt_weights: np.ndarray = field(init=False)

    def __post_init__(self):
        isw = np.exp(-0.5 * self.mesh.log_weights)
        isw.setflags(write=False)
        object.__setattr__(self, "inv_sqrt_weights", isw)

    @property
    def n(self) -> int:
        return self.mesh.n

    def eval_f(self, i: int, x: float) -> float:
        """f_i(x) for a single 0-based index i and point x >= 0."""
        if not 0 <= i < self.n:
            raise IndexError(f"basis index {i} out of range for n={self.n}")
        if x < 0.0:
            raise DomainError(f"basis functions are defined for x >= 0, got {x}")
        if x == 0.0:
            return 0.0
        node = self.mesh.nodes[i]
        if abs(x - node) < NODE_WINDOW * (1.0 + node):
            return float(self.inv_sqrt_weights[i])
        coeffs = np.zeros(self.n)
        coeffs[i] = 1.0
        return float(
            kernels.basis_series(
                self.mesh.nodes, self.mesh.log_weights, coeffs, np.array([x]), NODE_WINDOW
            )[0]
        )

    def eval_f_batch(self, coeffs, xs) -> np.ndarray:
        """sum_i coeffs[i] * f_i(x) for every x in ``xs``.

        Shares the L_N(x) e^{-x/2} factor across the whole sum, so a full
        density grid costs one scaled recurrence per point.
        """
        c = np.asarray(coeffs, dtype=np.float64)
        if c.shape != (self.n,):
            raise DomainError(f"expected {self.n} coefficients, got shape {c.shape}")
        x = np.asarray(xs, dtype=np.float64)
        if np.any(x < 0.0):
            raise DomainError("basis functions are defined for x >= 0")
        return kernels.basis_series(
            self.mesh.nodes, self.mesh.log_weights, c, x, NODE_WINDOW
        )
