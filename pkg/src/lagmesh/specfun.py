"""Special functions: Laguerre polynomials in signed-log form, Legendre
functions of both kinds, spherical Bessel functions, and log-Gamma.

Everything here is a stateless pure function, safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, SingularityError


@dataclass(frozen=True)
class SignedLogReal:
    """A real number carried as (sign, ln|value|).

    Keeps products such as L_N(x) e^{-x/2} representable at mesh sizes where
    |L_N| alone exceeds the double-precision range.  ``sign == 0`` iff the
    value is exactly zero (``log_magnitude`` is -inf there).
    """

    sign: int
    log_magnitude: float

    @classmethod
    def from_real(cls, value: float) -> "SignedLogReal":
        if value == 0.0:
            return cls(0, -math.inf)
        return cls(1 if value > 0.0 else -1, math.log(abs(value)))

    def to_real(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)


def laguerre(n: int, x: float) -> SignedLogReal:
    """L_n(x) with the normalization L_n(0) = 1, for any n >= 0 and x >= 0."""
    if n < 0:
        raise DomainError(f"Laguerre degree must be >= 0, got {n}")
    if x < 0.0:
        raise DomainError(f"Laguerre argument must be >= 0, got {x}")
    signs, logs = kernels.laguerre_signed_log(int(n), np.array([float(x)]))
    return SignedLogReal(int(signs[0]), float(logs[0]))


def legendre_p(l: int, t):
    """Legendre polynomial P_l(t) on [-1, 1] by the Bonnet recurrence.

    Accepts a scalar or an ndarray of evaluation points.
    """
    if l < 0:
        raise DomainError(f"Legendre degree must be >= 0, got {l}")
    t_arr = np.asarray(t, dtype=np.float64)
    if np.any(np.abs(t_arr) > 1.0):
        raise DomainError("Legendre polynomial argument must lie in [-1, 1]")
    if l == 0:
        out = np.ones_like(t_arr)
    elif l == 1:
        out = t_arr.copy()
    else:
        pm = np.ones_like(t_arr)
        pc = t_arr.copy()
        for k in range(2, l + 1):
            pm, pc = pc, ((2.0 * k - 1.0) * t_arr * pc - (k - 1.0) * pm) / k
        out = pc
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def _legendre_q1(z: float, q0: float) -> float:
    """Q_1(z) = z Q_0(z) - 1, as a series in 1/z^2 at large z where the
    closed form cancels catastrophically (z Q_0 -> 1)."""
    if z < 2.0:
        return z * q0 - 1.0
    u = 1.0 / (z * z)
    term = u
    total = 0.0
    k = 1
    while True:
        contribution = term / (2.0 * k + 1.0)
        total += contribution
        if contribution <= 1e-18 * total:
            return total
        term *= u
        k += 1


def legendre_q(l: int, z: float) -> float:
    """Legendre function of the second kind Q_l(z) for z > 1 strictly.

    Q_0(z) = (1/2) ln((z+1)/(z-1)) and Q_1 = z Q_0 - 1 in closed form.
    Higher orders use the three-term recurrence
    (l+1) Q_{l+1} = (2l+1) z Q_l - l Q_{l-1}, run forward while the growth
    factor of the contaminating first-kind solution stays harmless, and
    otherwise through downward ratio iteration (Q is the minimal solution,
    so the downward direction is the stable one at large z).

    Raises:
        SingularityError: z <= 1, where Q_l diverges (or is undefined).
    """
    if l < 0:
        raise DomainError(f"Legendre degree must be >= 0, got {l}")
    if not (z > 1.0):
        raise SingularityError(
            f"Q_l diverges at argument 1 and is singular for z <= 1 (got z={z})"
        )
    q0 = 0.5 * math.log1p(2.0 / (z - 1.0))
    if l == 0:
        return q0
    q1 = _legendre_q1(z, q0)
    if l == 1:
        return q1
    # P_l admixture grows like rho^{2l} along the forward recurrence
    rho = z + math.sqrt((z - 1.0) * (z + 1.0))
    if 2.0 * l * math.log(rho) <= 9.0:
        qm, qc = q0, q1
        for k in range(1, l):
            qm, qc = qc, ((2.0 * k + 1.0) * z * qc - k * qm) / (k + 1.0)
        return qc
    # downward ratios x_k = Q_k / Q_{k-1}: x_k = k / ((2k+1) z - (k+1) x_{k+1})
    extra = int(math.ceil(36.0 / (2.0 * math.log(rho)))) + 4
    x = 0.0
    ratios_needed = l - 1  # multiply onto the exact q1 for orders 2..l
    start = l + extra
    ratios = [0.0] * ratios_needed
    for k in range(start, 1, -1):
        x = k / ((2.0 * k + 1.0) * z - (k + 1.0) * x)
        if k <= l:
            ratios[k - 2] = x
    value = q1
    for r in ratios:
        value *= r
    return value


def spherical_bessel_j(l: int, x: float) -> float:
    """Spherical Bessel function j_l(x) for x >= 0.

    Closed trigonometric forms for l <= 2 (with short series near the
    origin); higher orders by downward recurrence seeded well above l and
    normalized against j_0/j_1, which is stable at small x where the upward
    recurrence is not.
    """
    if l < 0:
        raise DomainError(f"order must be >= 0, got {l}")
    if x < 0.0:
        raise DomainError(f"argument must be >= 0, got {x}")
    return float(kernels.spherical_jl(int(l), np.array([float(x)]))[0])


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0 (delegates to the C library implementation)."""
    if not (x > 0.0):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)
