"""Reference-data validation suites.

Each suite solves one of the built-in benchmark systems and compares against
high-precision reference values (independent published calculations of the
same discretizations).  The suites double as the acceptance layer for the
test suite and as the backend of ``lagmesh validate``.

Scales of the reference data:

* Coulomb table: h = 0.5 (a log-spaced h scan shows a wide plateau, so the
  precise value matters little at large N, but the printed digits correspond
  to 0.5).
* Cornell meson table: h = 0.5.
* Gaussian-well table: the spectral-method column was produced at h = 0.4,
  the direct Fourier-method column at h = 0.5.  The latter was determined
  empirically: it reproduces all fifteen direct-column values to better than
  3e-6 relative, while no other scale comes close.

Density fidelity thresholds are frozen from an N = 400 convergence study:
they bound the measured N = 135/150 deviations with roughly a factor-two
margin, and the N = 400 deviations sit one to two orders of magnitude lower.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from . import fourier_direct
from .densities import (
    Variable,
    analytic_coulomb_reference,
    default_momentum_grid,
    default_radius_grid,
    momentum_density,
    radial_density,
)
from .errors import SingularityError
from .models import (
    analytic_coulomb_energy,
    coulomb_test_model,
    fulcher_model,
    gaussian_comparison_model,
)
from .operators import (
    kinetic_matrix,
    observable_matrix,
    r_squared_matrix,
    spectral_decompose,
)
from .quadrature import build_mesh
from .solver import matrix_expectation, momentum_expectation, scan_h, solve

# --------------------------------------------------------------------------
# reference data
# --------------------------------------------------------------------------

COULOMB_H = 0.5
COULOMB_TOL = 2e-6
# N -> (E_1S, E_2S, E_1P), arbitrary units
COULOMB_ENERGIES: Dict[int, tuple] = {
    50: (-0.249960128, -0.062192468, -0.062606365),
    100: (-0.249989893, -0.062495421, -0.062501071),
    200: (-0.249997451, -0.062499681, -0.062500000),
    300: (-0.249998864, -0.062499858, -0.062500000),
}

FULCHER_H = 0.5
FULCHER_TOL = 5e-6
# N -> (E_1S, E_2S, E_1P), GeV
FULCHER_ENERGIES: Dict[int, tuple] = {
    10: (0.690205, 1.499120, 1.217182),
    20: (0.703199, 1.422610, 1.237518),
    30: (0.702660, 1.414775, 1.240446),
    40: (0.702642, 1.416084, 1.240220),
    50: (0.702623, 1.415932, 1.240240),
    60: (0.702614, 1.415927, 1.240238),
    70: (0.702609, 1.415917, 1.240238),
    80: (0.702605, 1.415911, 1.240238),
}
# the original phenomenological fit, four significant digits
FULCHER_ORIGINAL = {"1S": 0.703, "2S": 1.416, "1P": 1.240}

GAUSSIAN_TOL = 5e-6
GAUSSIAN_SPECTRAL_H = 0.4
GAUSSIAN_DIRECT_H = 0.5
GAUSSIAN_ROWS = ("energy", "sqrt_p2_m2", "p4", "r", "potential")
# N -> (E, <sqrt(p^2+m^2)>, <p^4>, <r>, <V(r)>)
GAUSSIAN_SPECTRAL: Dict[int, tuple] = {
    10: (1.87082354, 1.3537145, 3.975794, 1.73873, -0.8366054),
    20: (1.87098731, 1.3554645, 3.992363, 1.73295, -0.8399416),
    50: (1.87098362, 1.3553805, 3.991568, 1.73374, -0.8397774),
}
GAUSSIAN_DIRECT: Dict[int, tuple] = {
    10: (1.87044199, 1.3542724, 3.981098, 1.71171, -0.8381094),
    20: (1.87100878, 1.3554650, 3.992369, 1.73551, -0.8399212),
    50: (1.87098367, 1.3553807, 3.991570, 1.73376, -0.8397777),
}

DENSITY_MOMENTUM_N = 135
DENSITY_RADIUS_N = 150
DENSITY_H = 0.5
# frozen per-curve L-infinity thresholds over the default grids
DENSITY_MOMENTUM_TOL = {"1S": 2e-4, "2S": 2e-2, "1P": 7e-3}
DENSITY_RADIUS_TOL = {"1S": 1.5e-1, "2S": 5e-2, "1P": 4e-2}
# within the resolved region r <= 20 the curves are pointwise tight
DENSITY_RADIUS_CORE_RMAX = 20.0
DENSITY_RADIUS_CORE_TOL = {"1S": 1e-3, "2S": 4e-3, "1P": 3e-4}

PLATEAU_H_RANGE = (0.1, 1.0)
PLATEAU_POINTS = 20
PLATEAU_SPREAD_TOL = 1e-3

DIVERGENCE_TEST_SIZES = (3, 6, 10)
DIVERGENCE_YUKAWA_MU = 1e-6
DIVERGENCE_CROSS_TOL = 1e-4


@dataclass(frozen=True)
class Check:
    """Outcome of one validation comparison."""

    name: str
    passed: bool
    detail: str


def _num_check(name: str, actual: float, expected: float, tol: float, mode: str) -> Check:
    delta = abs(actual - expected)
    bound = tol * abs(expected) if mode == "rel" else tol
    return Check(
        name,
        bool(delta <= bound),
        f"got {actual:.10g}, want {expected:.10g} ({mode} tol {tol:g}, delta {delta:.2e})",
    )


def _bool_check(name: str, passed: bool, detail: str) -> Check:
    return Check(name, bool(passed), detail)


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------


def coulomb_checks() -> List[Check]:
    """Coulomb eigenvalues against the reference table plus analytic limits."""
    checks: List[Check] = []
    for n, (e1s, e2s, e1p) in COULOMB_ENERGIES.items():
        mesh = build_mesh(n, COULOMB_H)
        s_states = solve(mesh, coulomb_test_model(l=0), 2)
        p_states = solve(mesh, coulomb_test_model(l=1), 1)
        for label, actual, expected in (
            ("1S", s_states.energies[0], e1s),
            ("2S", s_states.energies[1], e2s),
            ("1P", p_states.energies[0], e1p),
        ):
            checks.append(
                _num_check(f"coulomb N={n} {label}", actual, expected, COULOMB_TOL, "abs")
            )
        if n == 300:
            checks.append(
                _num_check(
                    "coulomb analytic limit 1S",
                    s_states.energies[0],
                    analytic_coulomb_energy(0, 0),
                    COULOMB_TOL,
                    "abs",
                )
            )
            checks.append(
                _num_check(
                    "coulomb analytic limit 2S",
                    s_states.energies[1],
                    analytic_coulomb_energy(1, 0),
                    COULOMB_TOL,
                    "abs",
                )
            )
            checks.append(
                _num_check(
                    "coulomb analytic limit 1P",
                    p_states.energies[0],
                    analytic_coulomb_energy(0, 1),
                    COULOMB_TOL,
                    "abs",
                )
            )
    return checks


def fulcher_checks() -> List[Check]:
    """Cornell meson eigenvalues against the reference table."""
    checks: List[Check] = []
    for n, (e1s, e2s, e1p) in FULCHER_ENERGIES.items():
        mesh = build_mesh(n, FULCHER_H)
        s_states = solve(mesh, fulcher_model(l=0), 2)
        p_states = solve(mesh, fulcher_model(l=1), 1)
        values = {"1S": s_states.energies[0], "2S": s_states.energies[1], "1P": p_states.energies[0]}
        for label, expected in (("1S", e1s), ("2S", e2s), ("1P", e1p)):
            checks.append(
                _num_check(f"fulcher N={n} {label}", values[label], expected, FULCHER_TOL, "abs")
            )
        if n == 80:
            for label, expected in FULCHER_ORIGINAL.items():
                checks.append(
                    _num_check(
                        f"fulcher N=80 {label} vs original fit",
                        values[label],
                        expected,
                        5e-4,
                        "abs",
                    )
                )
    return checks


def _gaussian_observables(result, decomp) -> dict:
    c_index = 0
    return {
        "energy": float(result.energies[0]),
        "sqrt_p2_m2": momentum_expectation(result, c_index, lambda p2: np.sqrt(p2 + 1.0)),
        "p4": momentum_expectation(result, c_index, lambda p2: p2 * p2),
        "r": matrix_expectation(result, c_index, observable_matrix(decomp, np.sqrt)),
        "potential": matrix_expectation(
            result, c_index, observable_matrix(decomp, gaussian_comparison_model().potential)
        ),
    }


def gaussian_checks() -> List[Check]:
    """Gaussian-well observables: spectral route, direct Fourier route,
    bound-state window, cross-method agreement, Coulomb divergence."""
    checks: List[Check] = []
    model = gaussian_comparison_model(l=0)

    for n, expected in GAUSSIAN_SPECTRAL.items():
        mesh = build_mesh(n, GAUSSIAN_SPECTRAL_H)
        result = solve(mesh, model, 1)
        decomp = spectral_decompose(r_squared_matrix(mesh, 0))
        got = _gaussian_observables(result, decomp)
        for row, value in zip(GAUSSIAN_ROWS, expected):
            checks.append(
                _num_check(f"gaussian spectral N={n} {row}", got[row], value, GAUSSIAN_TOL, "rel")
            )
        if n == 50:
            checks.append(
                _bool_check(
                    "gaussian bound-state window",
                    0.0 < got["energy"] < 2.0,
                    f"E = {got['energy']:.8f}, window (0, 2)",
                )
            )

    for n, expected in GAUSSIAN_DIRECT.items():
        mesh = build_mesh(n, GAUSSIAN_DIRECT_H)
        kernel = fourier_direct.gaussian_kernel(3.0, 1.0, l=0)
        direct = fourier_direct.direct_potential_matrix(mesh, kernel)
        kin = kinetic_matrix(mesh, model.kinetic)
        energies, vectors = np.linalg.eigh(kin.data + direct.data)
        coeffs = vectors[:, 0]
        if coeffs[np.argmax(np.abs(coeffs))] < 0:
            coeffs = -coeffs
        decomp = spectral_decompose(r_squared_matrix(mesh, 0))
        p2 = mesh.momenta**2
        got = {
            "energy": float(energies[0]),
            "sqrt_p2_m2": float(np.dot(coeffs**2, np.sqrt(p2 + 1.0))),
            "p4": float(np.dot(coeffs**2, p2 * p2)),
            "r": float(coeffs @ observable_matrix(decomp, np.sqrt).data @ coeffs),
            "potential": float(coeffs @ observable_matrix(decomp, model.potential).data @ coeffs),
        }
        for row, value in zip(GAUSSIAN_ROWS, expected):
            checks.append(
                _num_check(f"gaussian direct N={n} {row}", got[row], value, GAUSSIAN_TOL, "rel")
            )

    # cross-method agreement at matched scale
    mesh = build_mesh(50, GAUSSIAN_SPECTRAL_H)
    spectral_e = solve(mesh, model, 1).energies[0]
    kernel = fourier_direct.gaussian_kernel(3.0, 1.0, l=0)
    direct = fourier_direct.direct_potential_matrix(mesh, kernel)
    direct_e = np.linalg.eigvalsh(kinetic_matrix(mesh, model.kinetic).data + direct.data)[0]
    checks.append(
        _num_check(
            "gaussian cross-method N=50 same h", direct_e, spectral_e, 5e-7, "abs"
        )
    )

    # the direct route must refuse the Coulomb diagonal
    mesh = build_mesh(6, 0.5)
    try:
        fourier_direct.direct_potential_matrix(mesh, fourier_direct.coulomb_kernel(1.0, 0))
        checks.append(_bool_check("coulomb direct divergence", False, "no error raised"))
    except SingularityError as exc:
        checks.append(_bool_check("coulomb direct divergence", True, f"raised: {exc}"))
    return checks


def density_checks() -> List[Check]:
    """L-infinity distance of reconstructed densities to the closed forms."""
    checks: List[Check] = []

    mesh = build_mesh(DENSITY_MOMENTUM_N, DENSITY_H)
    s_states = solve(mesh, coulomb_test_model(l=0), 2)
    p_states = solve(mesh, coulomb_test_model(l=1), 1)
    grid = default_momentum_grid(mesh)
    for label, result, index in (("1S", s_states, 0), ("2S", s_states, 1), ("1P", p_states, 0)):
        curve = momentum_density(result, index, grid)
        exact = analytic_coulomb_reference(label, Variable.MOMENTUM, grid)
        err = float(np.max(np.abs(curve.values - exact.values)))
        checks.append(
            _bool_check(
                f"momentum density {label} N={DENSITY_MOMENTUM_N}",
                err <= DENSITY_MOMENTUM_TOL[label],
                f"Linf {err:.2e}, tol {DENSITY_MOMENTUM_TOL[label]:g}",
            )
        )

    mesh = build_mesh(DENSITY_RADIUS_N, DENSITY_H)
    s_states = solve(mesh, coulomb_test_model(l=0), 2)
    p_states = solve(mesh, coulomb_test_model(l=1), 1)
    grid = default_radius_grid(mesh)
    core = grid <= DENSITY_RADIUS_CORE_RMAX
    for label, result, index in (("1S", s_states, 0), ("2S", s_states, 1), ("1P", p_states, 0)):
        curve = radial_density(result, index, grid)
        exact = analytic_coulomb_reference(label, Variable.RADIUS, grid)
        err_all = float(np.max(np.abs(curve.values - exact.values)))
        err_core = float(np.max(np.abs(curve.values[core] - exact.values[core])))
        checks.append(
            _bool_check(
                f"radial density {label} N={DENSITY_RADIUS_N} full grid",
                err_all <= DENSITY_RADIUS_TOL[label],
                f"Linf {err_all:.2e}, tol {DENSITY_RADIUS_TOL[label]:g}",
            )
        )
        checks.append(
            _bool_check(
                f"radial density {label} N={DENSITY_RADIUS_N} r<={DENSITY_RADIUS_CORE_RMAX:g}",
                err_core <= DENSITY_RADIUS_CORE_TOL[label],
                f"Linf {err_core:.2e}, tol {DENSITY_RADIUS_CORE_TOL[label]:g}",
            )
        )
    return checks


def plateau_checks() -> List[Check]:
    """Stability of the ground-state energy across the h plateau."""
    grid = np.geomspace(*PLATEAU_H_RANGE, PLATEAU_POINTS)
    spreads = {}
    for n in (20, 100):
        energies = [pt.energy for pt in scan_h(coulomb_test_model(l=0), n, grid)]
        if any(e is None for e in energies):
            return [_bool_check("plateau scan", False, "a scan point failed")]
        spreads[n] = max(energies) - min(energies)
    checks = [
        _bool_check(
            "plateau spread N=100",
            spreads[100] < PLATEAU_SPREAD_TOL,
            f"max-min {spreads[100]:.2e}, tol {PLATEAU_SPREAD_TOL:g}",
        ),
        _bool_check(
            "plateau narrows with N",
            spreads[100] < spreads[20],
            f"spread N=100 {spreads[100]:.2e} < spread N=20 {spreads[20]:.2e}",
        ),
    ]
    return checks


def divergence_checks() -> List[Check]:
    """Coulomb direct elements: divergent diagonal, finite symmetric
    off-diagonal, agreement with the screened numeric kernel."""
    checks: List[Check] = []
    for n in DIVERGENCE_TEST_SIZES:
        mesh = build_mesh(n, 0.5)
        p = mesh.momenta
        diag_all_raise = True
        for i in range(n):
            try:
                fourier_direct.coulomb_partial_wave(1.0, 0, p[i], p[i])
                diag_all_raise = False
            except SingularityError:
                pass
        checks.append(
            _bool_check(
                f"coulomb diagonal divergent N={n}",
                diag_all_raise,
                "every diagonal element raised",
            )
        )
        numeric = fourier_direct.PartialWaveKernel(
            l=0,
            v_ft=lambda k: fourier_direct.yukawa_vft(1.0, DIVERGENCE_YUKAWA_MU, k),
        )
        worst_sym = 0.0
        worst_cross = 0.0
        finite = True
        for i in range(n):
            for j in range(i + 1, n):
                vij = fourier_direct.coulomb_partial_wave(1.0, 0, p[i], p[j])
                vji = fourier_direct.coulomb_partial_wave(1.0, 0, p[j], p[i])
                finite = finite and math.isfinite(vij) and math.isfinite(vji)
                worst_sym = max(worst_sym, abs(vij - vji) / abs(vij))
                approx = fourier_direct.partial_wave(numeric, p[i], p[j])
                worst_cross = max(worst_cross, abs(approx - vij) / abs(vij))
        checks.append(
            _bool_check(
                f"coulomb off-diagonal finite+symmetric N={n}",
                finite and worst_sym < 1e-12,
                f"max relative asymmetry {worst_sym:.2e}",
            )
        )
        checks.append(
            _bool_check(
                f"coulomb vs screened numeric kernel N={n}",
                worst_cross <= DIVERGENCE_CROSS_TOL,
                f"max relative deviation {worst_cross:.2e}, tol {DIVERGENCE_CROSS_TOL:g}",
            )
        )
    return checks


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "coulomb": coulomb_checks,
    "fulcher": fulcher_checks,
    "gaussian": gaussian_checks,
}


def run_suite(name: str) -> List[Check]:
    """Run one named suite, or ``all`` for every check including densities,
    the h-plateau, and the divergence demonstration."""
    if name in SUITES:
        return SUITES[name]()
    if name == "all":
        checks: List[Check] = []
        for suite in SUITES.values():
            checks.extend(suite())
        checks.extend(density_checks())
        checks.extend(plateau_checks())
        checks.extend(divergence_checks())
        return checks
    raise KeyError(f"unknown suite {name!r}; choose from coulomb, fulcher, gaussian, all")
