"""Direct potential matrix elements from the Fourier-transformed kernel.

For short-range potentials the matrix element can be taken directly from the
nonlocal momentum kernel: transform V(r), project on partial waves,

    V_FT(k) = (1 / 2 pi^2 k) int_0^inf V(r) sin(kr) r dr,
    V_l(p, p') = 2 pi int_{-1}^{1} P_l(t) V_FT(sqrt(p^2 + p'^2 - 2 p p' t)) dt,

then collapse the double radial integral with the mesh quadrature:

    V_ij ~ h^3 sqrt(lambda_i lambda_j) x_i x_j V_l(h x_i, h x_j).

This route works for Gaussian and Yukawa shapes.  For the Coulomb kernel the
partial wave is -a/(pi p p') Q_l((p^2+p'^2)/(2 p p')), whose argument equals
1 on the diagonal where Q_l diverges: the i = j elements do not exist, which
is exactly what :func:`direct_potential_matrix` reports.  The spectral-
calculus route in :mod:`lagmesh.operators` has no such restriction.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, SingularityError
from .operators import OperatorMatrix, Role
from .quadrature import Mesh
from .specfun import legendre_p, legendre_q

DEFAULT_T_ORDER = 200


@dataclass(frozen=True)
class PartialWaveKernel:
    """Partial-wave potential kernel V_l(p, p').

    Either ``v_ft`` (the spherical Fourier transform, integrated numerically
    over the angle) or ``v_l`` (a closed-form partial wave, used when the
    angular integrand would be singular) must be provided; ``v_l`` wins when
    both are set.
    """

    l: int
    v_ft: Optional[Callable[[np.ndarray], np.ndarray]] = None
    quadrature_order: int = DEFAULT_T_ORDER
    v_l: Optional[Callable[[float, float], float]] = None

    def __post_init__(self):
        if self.l < 0:
            raise DomainError(f"angular momentum must be >= 0, got {self.l}")
        if self.quadrature_order < 1:
            raise DomainError("quadrature order must be positive")
        if self.v_ft is None and self.v_l is None:
            raise DomainError("kernel needs v_ft or v_l")


def gaussian_vft(a: float, b: float, k) -> np.ndarray:
    """Fourier transform of V(r) = -a exp(-b^2 r^2):
    V_FT(k) = -a exp(-k^2 / 4b^2) / (8 pi^{3/2} b^3)."""
    if not b > 0.0:
        raise DomainError(f"Gaussian range parameter must be positive, got {b}")
    k = np.asarray(k, dtype=np.float64)
    return -a * np.exp(-(k * k) / (4.0 * b * b)) / (8.0 * math.pi**1.5 * b**3)


def yukawa_vft(a: float, mu: float, k) -> np.ndarray:
    """Fourier transform of V(r) = -a exp(-mu r)/r:
    V_FT(k) = -a / (2 pi^2 (k^2 + mu^2)); mu = 0 is the Coulomb transform."""
    if mu < 0.0:
        raise DomainError(f"screening mass must be >= 0, got {mu}")
    k = np.asarray(k, dtype=np.float64)
    return -a / (2.0 * math.pi**2 * (k * k + mu * mu))


@functools.lru_cache(maxsize=8)
def _gauss_legendre(order: int):
    t, w = np.polynomial.legendre.leggauss(order)
    return t, w


def partial_wave(kernel: PartialWaveKernel, p: float, pp: float) -> float:
    """V_l(p, p') by Gauss-Legendre integration of the angular variable."""
    if kernel.v_ft is None:
        raise DomainError("partial_wave needs a kernel with v_ft")
    if not (p > 0.0 and pp > 0.0):
        raise DomainError(f"momenta must be positive, got ({p}, {pp})")
    t, w = _gauss_legendre(kernel.quadrature_order)
    k = np.sqrt(np.maximum(p * p + pp * pp - 2.0 * p * pp * t, 0.0))
    integrand = legendre_p(kernel.l, t) * kernel.v_ft(k)
    if not np.all(np.isfinite(integrand)):
        raise SingularityError(
            f"angular integrand is singular for (p, p') = ({p}, {pp}); "
            "use a closed-form kernel for long-range potentials"
        )
    return 2.0 * math.pi * float(np.dot(w, integrand))


def coulomb_partial_wave(a: float, l: int, p: float, pp: float) -> float:
    """Closed-form Coulomb partial wave -a/(pi p p') Q_l((p^2+p'^2)/(2 p p')).

    Raises:
        SingularityError: p == p', where the Q_l argument is identically 1.
    """
    if not (p > 0.0 and pp > 0.0):
        raise DomainError(f"momenta must be positive, got ({p}, {pp})")
    if p == pp:
        raise SingularityError(
            f"Coulomb partial wave diverges on the diagonal p = p' = {p}"
        )
    z = (p * p + pp * pp) / (2.0 * p * pp)
    return -a / (math.pi * p * pp) * legendre_q(l, z)


def _yukawa_closed_partial_wave(a: float, mu: float, l: int, p: float, pp: float) -> float:
    # same Q_l form with the screening mass shifting the argument off 1
    z = (p * p + pp * pp + mu * mu) / (2.0 * p * pp)
    return -a / (math.pi * p * pp) * legendre_q(l, z)


def gaussian_kernel(a: float, b: float, l: int, quadrature_order: int = DEFAULT_T_ORDER) -> PartialWaveKernel:
    """Kernel for V(r) = -a exp(-b^2 r^2), angular integral done numerically."""
    return PartialWaveKernel(
        l=l, v_ft=functools.partial(gaussian_vft, a, b), quadrature_order=quadrature_order
    )


def yukawa_kernel(a: float, mu: float, l: int) -> PartialWaveKernel:
    """Kernel for V(r) = -a exp(-mu r)/r via the exact Q_l partial wave.

    The closed form is preferred over the angular integral, whose integrand
    develops a t -> 1 singularity as mu -> 0.
    """
    if mu <= 0.0:
        return coulomb_kernel(a, l)
    return PartialWaveKernel(
        l=l,
        v_ft=functools.partial(yukawa_vft, a, mu),
        v_l=functools.partial(_yukawa_closed_partial_wave, a, mu, l),
    )


def coulomb_kernel(a: float, l: int) -> PartialWaveKernel:
    """Kernel for V(r) = -a/r; finite off the diagonal only."""
    return PartialWaveKernel(l=l, v_l=functools.partial(coulomb_partial_wave, a, l))


def kernel_value(kernel: PartialWaveKernel, p: float, pp: float) -> float:
    """V_l(p, p'), dispatching to the closed form when the kernel has one."""
    if kernel.v_l is not None:
        return kernel.v_l(p, pp)
    return partial_wave(kernel, p, pp)


def direct_potential_matrix(mesh: Mesh, kernel: PartialWaveKernel) -> OperatorMatrix:
    """Potential matrix V_ij = h^3 sqrt(lambda_i lambda_j) x_i x_j V_l(p_i, p_j).

    The weight factors are assembled in the log domain.  A singular kernel
    value (the Coulomb diagonal) propagates as :class:`SingularityError`
    naming the element: that failure is the documented property of the
    direct route, not a bug.
    """
    x = mesh.nodes
    lw = mesh.log_weights
    h = mesh.h
    p = mesh.momenta
    data = np.zeros((mesh.n, mesh.n))
    log_h3 = 3.0 * math.log(h)
    for i in range(mesh.n):
        for j in range(i, mesh.n):
            try:
                vl = kernel_value(kernel, p[i], p[j])
            except SingularityError as exc:
                raise SingularityError(
                    f"direct matrix element ({i}, {j}) does not exist: {exc}"
                ) from exc
            if not math.isfinite(vl):
                raise SingularityError(
                    f"direct matrix element ({i}, {j}) is non-finite"
                )
            factor = math.exp(log_h3 + 0.5 * (lw[i] + lw[j]) + math.log(x[i]) + math.log(x[j]))
            data[i, j] = data[j, i] = factor * vl
    return OperatorMatrix(data, Role.POTENTIAL, mesh.n, mesh.h)
