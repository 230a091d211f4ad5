"""Hot numerical kernels, in two interchangeable implementations.

Every public name here is bound at import time to either a numba ``@njit``
loop or a vectorized pure-numpy routine, according to
:data:`lagmesh._backend.BACKEND`.  Both variants of each kernel are kept
importable (``NUMPY_IMPLS`` / ``NUMBA_IMPLS``) so the benchmark and the
backend-parity tests can compare them directly.

Numerical conventions shared by both paths:

* Laguerre values are carried as (sign, log magnitude) pairs; the recurrence
  is renormalized by powers of two every 16 steps, so degree-300 polynomials
  can be evaluated anywhere on the half-line without overflow.
* "At a node" means ``|x - x_i| < window * (1 + x_i)``.
"""

from __future__ import annotations

import math

import numpy as np

from ._backend import BACKEND, HAS_NUMBA, USE_NUMBA, njit

_RESCALE_EVERY = 16
_EXP_LIMIT = 256  # rescale when the binary exponent leaves [-256, 256]
_LN2 = math.log(2.0)

# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _laguerre_signed_log_numpy(n, xs):
    """Signs and log magnitudes of L_n at the points ``xs`` (n >= 0)."""
    x = np.asarray(xs, dtype=np.float64)
    if n == 0:
        return np.ones_like(x), np.zeros_like(x)
    pm = np.ones_like(x)
    pc = 1.0 - x
    scale = np.zeros_like(x)
    for k in range(1, n):
        pm, pc = pc, ((2.0 * k + 1.0 - x) * pc - k * pm) / (k + 1.0)
        if k % _RESCALE_EVERY == 0:
            _, e = np.frexp(np.maximum(np.abs(pc), np.abs(pm)))
            shift = np.where(np.abs(e) > _EXP_LIMIT, -e, 0).astype(np.int64)
            pc = np.ldexp(pc, shift)
            pm = np.ldexp(pm, shift)
            scale -= shift * _LN2
    sign = np.sign(pc)
    with np.errstate(divide="ignore"):
        logmag = np.where(pc == 0.0, -np.inf, np.log(np.abs(np.where(pc == 0.0, 1.0, pc)))) + scale
    return sign, logmag


def _laguerre_pair_numpy(n, xs):
    """(ln common scale, scaled L_n, scaled L_{n-1}) at ``xs`` (n >= 1)."""
    x = np.asarray(xs, dtype=np.float64)
    pm = np.ones_like(x)
    pc = 1.0 - x
    scale = np.zeros_like(x)
    for k in range(1, n):
        pm, pc = pc, ((2.0 * k + 1.0 - x) * pc - k * pm) / (k + 1.0)
        if k % _RESCALE_EVERY == 0:
            _, e = np.frexp(np.maximum(np.abs(pc), np.abs(pm)))
            shift = np.where(np.abs(e) > _EXP_LIMIT, -e, 0).astype(np.int64)
            pc = np.ldexp(pc, shift)
            pm = np.ldexp(pm, shift)
            scale -= shift * _LN2
    return scale, pc, pm


def _polish_laguerre_roots_numpy(n, nodes, rel_tol, max_iter):
    """Newton-polish approximate roots of L_n.  Returns (roots, converged).

    Newton converges quadratically until the evaluation-roundoff floor, where
    steps stop shrinking; a node whose step stagnates below 1000 * rel_tol
    relative is accepted as converged-to-roundoff.
    """
    x = np.array(nodes, dtype=np.float64)
    prev = np.full_like(x, np.inf)
    active = np.ones(x.shape, dtype=bool)
    ok = np.zeros(x.shape, dtype=bool)
    for _ in range(max_iter):
        _, ln, lnm1 = _laguerre_pair_numpy(n, x)
        # L_n'(x) = n (L_n(x) - L_{n-1}(x)) / x ; the common scale cancels.
        step = x * ln / (n * (ln - lnm1))
        x = np.where(active, x - step, x)
        astep = np.abs(step)
        tight = astep <= rel_tol * x
        stalled = astep >= prev
        ok |= active & (tight | (stalled & (astep <= 1e3 * rel_tol * x)))
        active &= ~(tight | stalled)
        prev = astep
        if not np.any(active):
            break
    return x, bool(np.all(ok))


def _pairwise_log_weights_numpy(nodes, two_log_gamma):
    """ln lambda_k = x_k - ln x_k + 2 ln G(n+1) - sum_{j != k} 2 ln|x_k - x_j|."""
    x = np.asarray(nodes, dtype=np.float64)
    diffs = np.abs(x[:, None] - x[None, :])
    np.fill_diagonal(diffs, 1.0)
    return x - np.log(x) + two_log_gamma - 2.0 * np.sum(np.log(diffs), axis=1)


def _basis_series_numpy(nodes, log_weights, coeffs, xs, window):
    """sum_i C_i f_i(x) for each x, f_i the regularized Lagrange functions."""
    x = np.asarray(xs, dtype=np.float64)
    nodes = np.asarray(nodes, dtype=np.float64)
    sign_l, log_l = _laguerre_signed_log_numpy(nodes.size, x)
    pos = x > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        log_g = log_l + np.log(np.where(pos, x, 1.0)) - 0.5 * x  # x L_n(x) e^{-x/2}
        diffs = x[:, None] - nodes[None, :]
        near = np.abs(diffs) < window * (1.0 + nodes[None, :])
        alt = np.where(np.arange(nodes.size) % 2 == 0, -1.0, 1.0)
        logf = log_g[:, None] - np.log(np.abs(np.where(near, 1.0, diffs))) - 0.5 * np.log(nodes)[None, :]
        f = (sign_l[:, None] * np.sign(diffs) * alt[None, :]) * np.exp(logf)
    f = np.where(near, np.exp(-0.5 * np.asarray(log_weights))[None, :], f)
    f[~pos, :] = 0.0
    return f @ np.asarray(coeffs, dtype=np.float64)


def _sph_jl_one(l, x):
    """Scalar spherical Bessel j_l(x), x >= 0 (numpy path helper)."""
    if l == 0:
        return 1.0 - x * x / 6.0 if x < 1e-4 else math.sin(x) / x
    if l == 1:
        if x < 0.05:
            return x / 3.0 * (1.0 - x * x / 10.0 + x**4 / 280.0)
        return math.sin(x) / (x * x) - math.cos(x) / x
    if l == 2:
        if x < 0.1:
            return x * x / 15.0 * (1.0 - x * x / 14.0 + x**4 / 504.0)
        return (3.0 / (x * x) - 1.0) * math.sin(x) / x - 3.0 * math.cos(x) / (x * x)
    # downward (Miller) recurrence, normalized against the closed forms
    if x < 1e-6:
        return 0.0
    m = l + 20 + int(math.ceil(x))
    jp = 0.0
    jc = 1e-30
    jl = j1 = j0 = 0.0
    for k in range(m, 0, -1):
        jm = (2.0 * k + 1.0) / x * jc - jp
        jp, jc = jc, jm
        if k - 1 == l:
            jl = jc
        if abs(jc) > 1e250:
            jp *= 1e-250
            jc *= 1e-250
            jl *= 1e-250
    j0 = jc
    j1 = jp
    j0t = math.sin(x) / x
    j1t = math.sin(x) / (x * x) - math.cos(x) / x
    scale = j0t / j0 if abs(j0) >= abs(j1) else j1t / j1
    return jl * scale


def _spherical_jl_numpy(l, xs):
    x = np.asarray(xs, dtype=np.float64)
    if l <= 2:
        z = np.where(x == 0.0, 1.0, x)
        with np.errstate(invalid="ignore", divide="ignore"):
            if l == 0:
                out = np.where(x < 1e-4, 1.0 - x * x / 6.0, np.sin(z) / z)
            elif l == 1:
                out = np.where(
                    x < 0.05,
                    x / 3.0 * (1.0 - x * x / 10.0 + x**4 / 280.0),
                    np.sin(z) / z**2 - np.cos(z) / z,
                )
            else:
                out = np.where(
                    x < 0.1,
                    x * x / 15.0 * (1.0 - x * x / 14.0 + x**4 / 504.0),
                    (3.0 / z**2 - 1.0) * np.sin(z) / z - 3.0 * np.cos(z) / z**2,
                )
        return out
    return np.array([_sph_jl_one(l, float(v)) for v in np.atleast_1d(x)])


def _bessel_series_numpy(amplitudes, scaled_nodes, l, rs):
    """sum_i a_i j_l(b_i r) for each r (b_i the momentum-scaled nodes)."""
    r = np.asarray(rs, dtype=np.float64)
    a = np.asarray(amplitudes, dtype=np.float64)
    b = np.asarray(scaled_nodes, dtype=np.float64)
    if l <= 2:
        z = np.multiply.outer(r, b)
        return _spherical_jl_numpy(l, z.ravel()).reshape(z.shape) @ a
    out = np.empty_like(r)
    for j, rj in enumerate(r):
        out[j] = sum(a[i] * _sph_jl_one(l, b[i] * rj) for i in range(b.size))
    return out


NUMPY_IMPLS = {
    "laguerre_signed_log": _laguerre_signed_log_numpy,
    "polish_laguerre_roots": _polish_laguerre_roots_numpy,
    "pairwise_log_weights": _pairwise_log_weights_numpy,
    "basis_series": _basis_series_numpy,
    "spherical_jl": _spherical_jl_numpy,
    "bessel_series": _bessel_series_numpy,
}

# ---------------------------------------------------------------------------
# numba implementations (same arithmetic, loop form)
# ---------------------------------------------------------------------------


@njit
def _laguerre_pair_scalar(n, x):
    pm = 1.0
    pc = 1.0 - x
    scale = 0.0
    for k in range(1, n):
        pm, pc = pc, ((2.0 * k + 1.0 - x) * pc - k * pm) / (k + 1.0)
        if k % _RESCALE_EVERY == 0:
            big = abs(pc) if abs(pc) > abs(pm) else abs(pm)
            _, e = math.frexp(big)
            if abs(e) > _EXP_LIMIT:
                pc = math.ldexp(pc, -e)
                pm = math.ldexp(pm, -e)
                scale += e * _LN2
    return scale, pc, pm


@njit
def _laguerre_signed_log_numba(n, xs):
    m = xs.size
    signs = np.empty(m)
    logs = np.empty(m)
    for j in range(m):
        if n == 0:
            signs[j] = 1.0
            logs[j] = 0.0
            continue
        scale, pc, _ = _laguerre_pair_scalar(n, xs[j])
        if pc == 0.0:
            signs[j] = 0.0
            logs[j] = -np.inf
        else:
            signs[j] = 1.0 if pc > 0.0 else -1.0
            logs[j] = math.log(abs(pc)) + scale
    return signs, logs


@njit
def _polish_laguerre_roots_numba(n, nodes, rel_tol, max_iter):
    x = nodes.copy()
    ok = True
    for j in range(x.size):
        converged = False
        prev = np.inf
        for _ in range(max_iter):
            _, ln, lnm1 = _laguerre_pair_scalar(n, x[j])
            step = x[j] * ln / (n * (ln - lnm1))
            x[j] -= step
            astep = abs(step)
            if astep <= rel_tol * x[j]:
                converged = True
                break
            if astep >= prev:  # evaluation-roundoff floor reached
                converged = astep <= 1e3 * rel_tol * x[j]
                break
            prev = astep
        if not converged:
            ok = False
    return x, ok


@njit
def _pairwise_log_weights_numba(nodes, two_log_gamma):
    n = nodes.size
    out = np.empty(n)
    for k in range(n):
        s = 0.0
        for j in range(n):
            if j != k:
                s += math.log(abs(nodes[k] - nodes[j]))
        out[k] = nodes[k] - math.log(nodes[k]) + two_log_gamma - 2.0 * s
    return out


@njit
def _basis_series_numba(nodes, log_weights, coeffs, xs, window):
    n = nodes.size
    m = xs.size
    out = np.zeros(m)
    for j in range(m):
        x = xs[j]
        if x <= 0.0:
            continue
        scale, pc, _ = _laguerre_pair_scalar(n, x)
        has_l = pc != 0.0
        if has_l:
            log_g = scale + math.log(abs(pc)) + math.log(x) - 0.5 * x
            sign_l = 1.0 if pc > 0.0 else -1.0
        else:
            log_g = -np.inf
            sign_l = 0.0
        acc = 0.0
        for i in range(n):
            d = x - nodes[i]
            if abs(d) < window * (1.0 + nodes[i]):
                acc += coeffs[i] * math.exp(-0.5 * log_weights[i])
            elif has_l:
                alt = -1.0 if i % 2 == 0 else 1.0
                sgn = alt * sign_l * (1.0 if d > 0.0 else -1.0)
                acc += coeffs[i] * sgn * math.exp(log_g - math.log(abs(d)) - 0.5 * math.log(nodes[i]))
        out[j] = acc
    return out


@njit
def _sph_jl_scalar(l, x):
    if l == 0:
        if x < 1e-4:
            return 1.0 - x * x / 6.0
        return math.sin(x) / x
    if l == 1:
        if x < 0.05:
            return x / 3.0 * (1.0 - x * x / 10.0 + x**4 / 280.0)
        return math.sin(x) / (x * x) - math.cos(x) / x
    if l == 2:
        if x < 0.1:
            return x * x / 15.0 * (1.0 - x * x / 14.0 + x**4 / 504.0)
        return (3.0 / (x * x) - 1.0) * math.sin(x) / x - 3.0 * math.cos(x) / (x * x)
    if x < 1e-6:
        return 0.0
    m = l + 20 + int(math.ceil(x))
    jp = 0.0
    jc = 1e-30
    jl = 0.0
    for k in range(m, 0, -1):
        jm = (2.0 * k + 1.0) / x * jc - jp
        jp, jc = jc, jm
        if k - 1 == l:
            jl = jc
        if abs(jc) > 1e250:
            jp *= 1e-250
            jc *= 1e-250
            jl *= 1e-250
    j0 = jc
    j1 = jp
    j0t = math.sin(x) / x
    j1t = math.sin(x) / (x * x) - math.cos(x) / x
    scale = j0t / j0 if abs(j0) >= abs(j1) else j1t / j1
    return jl * scale


@njit
def _spherical_jl_numba(l, xs):
    out = np.empty(xs.size)
    for j in range(xs.size):
        out[j] = _sph_jl_scalar(l, xs[j])
    return out


@njit
def _bessel_series_numba(amplitudes, scaled_nodes, l, rs):
    m = rs.size
    n = scaled_nodes.size
    out = np.zeros(m)
    for j in range(m):
        acc = 0.0
        for i in range(n):
            acc += amplitudes[i] * _sph_jl_scalar(l, scaled_nodes[i] * rs[j])
        out[j] = acc
    return out


NUMBA_IMPLS = {
    "laguerre_signed_log": _laguerre_signed_log_numba,
    "polish_laguerre_roots": _polish_laguerre_roots_numba,
    "pairwise_log_weights": _pairwise_log_weights_numba,
    "basis_series": _basis_series_numba,
    "spherical_jl": _spherical_jl_numba,
    "bessel_series": _bessel_series_numba,
}

_ACTIVE = NUMBA_IMPLS if USE_NUMBA else NUMPY_IMPLS


def _as_f64(a):
    return np.ascontiguousarray(np.asarray(a, dtype=np.float64))


def laguerre_signed_log(n, xs):
    return _ACTIVE["laguerre_signed_log"](n, _as_f64(xs))


def polish_laguerre_roots(n, nodes, rel_tol=1e-14, max_iter=50):
    return _ACTIVE["polish_laguerre_roots"](n, _as_f64(nodes), rel_tol, max_iter)


def pairwise_log_weights(nodes, two_log_gamma):
    return _ACTIVE["pairwise_log_weights"](_as_f64(nodes), two_log_gamma)


def basis_series(nodes, log_weights, coeffs, xs, window=1e-8):
    return _ACTIVE["basis_series"](
        _as_f64(nodes), _as_f64(log_weights), _as_f64(coeffs), _as_f64(xs), window
    )


def spherical_jl(l, xs):
    return _ACTIVE["spherical_jl"](l, _as_f64(xs))


def bessel_series(amplitudes, scaled_nodes, l, rs):
    return _ACTIVE["bessel_series"](
        _as_f64(amplitudes), _as_f64(scaled_nodes), l, _as_f64(rs)
    )


__all__ = [
    "BACKEND",
    "HAS_NUMBA",
    "NUMPY_IMPLS",
    "NUMBA_IMPLS",
    "laguerre_signed_log",
    "polish_laguerre_roots",
    "pairwise_log_weights",
    "basis_series",
    "spherical_jl",
    "bessel_series",
]
