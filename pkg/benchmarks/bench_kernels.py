#!/usr/bin/env python3
"""Side-by-side timing of the numba kernels against the pure-numpy fallback.

Run directly:  python3 benchmarks/bench_kernels.py [--repeat N]

The first numba call of each kernel compiles (cached on disk afterwards);
compilation happens in the warmup pass and is not counted.
"""

import argparse
import math
import time

import numpy as np

from lagmesh import build_mesh
from lagmesh.kernels import HAS_NUMBA, NUMBA_IMPLS, NUMPY_IMPLS


def time_call(func, args, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions (best-of)")
    args = parser.parse_args()

    n = 300
    mesh = build_mesh(n, 0.5)
    rng = np.random.default_rng(42)
    coeffs = rng.normal(size=n)
    coeffs /= np.linalg.norm(coeffs)
    xs = np.linspace(0.0, 1400.0, 2000)
    rs = np.linspace(0.0, 50.0, 2000)
    amplitudes = rng.normal(size=n)
    gamma_term = 2.0 * math.lgamma(n + 1)
    from scipy.linalg import eigh_tridiagonal

    start_nodes = eigh_tridiagonal(
        2.0 * np.arange(n) + 1.0, np.arange(1.0, n), eigvals_only=True
    )

    cases = {
        "laguerre_signed_log": (n, xs),
        "polish_laguerre_roots": (n, start_nodes, 1e-14, 50),
        "pairwise_log_weights": (mesh.nodes, gamma_term),
        "basis_series": (mesh.nodes, mesh.log_weights, coeffs, xs, 1e-8),
        "spherical_jl": (2, rs * 7.0),
        "bessel_series": (amplitudes, mesh.momenta, 2, rs),
    }

    if not HAS_NUMBA:
        print("numba not available; timing the numpy path only")

    print(f"mesh size {n}, 2000-point grids, best of {args.repeat}")
    print(f"{'kernel':<24} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>9}")
    for name, call_args in cases.items():
        t_np = time_call(NUMPY_IMPLS[name], call_args, args.repeat)
        if HAS_NUMBA:
            NUMBA_IMPLS[name](*call_args)  # warmup / compile
            t_nb = time_call(NUMBA_IMPLS[name], call_args, args.repeat)
            print(f"{name:<24} {1e3 * t_np:>12.3f} {1e3 * t_nb:>12.3f} {t_np / t_nb:>8.1f}x")
        else:
            print(f"{name:<24} {1e3 * t_np:>12.3f} {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
