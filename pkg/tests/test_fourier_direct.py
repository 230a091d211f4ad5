import math

import numpy as np
import pytest
from scipy.integrate import quad

from lagmesh import (
    DomainError,
    PartialWaveKernel,
    SingularityError,
    build_mesh,
    coulomb_kernel,
    coulomb_partial_wave,
    direct_potential_matrix,
    gaussian_kernel,
    gaussian_vft,
    kinetic_matrix,
    partial_wave,
    solve,
    yukawa_kernel,
    yukawa_vft,
)
from lagmesh.fourier_direct import kernel_value
from lagmesh.models import gaussian_comparison_model


@pytest.mark.parametrize("a,b,k", [(3.0, 1.0, 2.0), (1.0, 0.5, 0.3), (2.0, 2.0, 5.0)])
def test_gaussian_vft_against_quadrature(a, b, k):
    oracle, err = quad(
        lambda r: -a * math.exp(-(b * r) ** 2) * math.sin(k * r) * r,
        0.0,
        40.0 / b,
        epsabs=1e-14,
        epsrel=1e-13,
        limit=200,
    )
    oracle /= 2.0 * math.pi**2 * k
    assert err < 1e-10
    assert gaussian_vft(a, b, k) == pytest.approx(oracle, rel=1e-9)


def test_gaussian_vft_edge_cases():
    assert gaussian_vft(0.0, 1.0, 2.0) == 0.0
    limit = -3.0 / (8.0 * math.pi**1.5)
    assert gaussian_vft(3.0, 1.0, 1e-7) == pytest.approx(limit, rel=1e-9)
    with pytest.raises(DomainError):
        gaussian_vft(1.0, 0.0, 1.0)


def test_yukawa_vft_values_and_oracle():
    assert yukawa_vft(1.0, 0.0, 1.0) == pytest.approx(-1.0 / (2.0 * math.pi**2), rel=1e-14)
    assert yukawa_vft(1.0, 1.0, 1.0) == pytest.approx(-1.0 / (4.0 * math.pi**2), rel=1e-14)
    assert yukawa_vft(0.0, 1.0, 2.0) == 0.0
    k = 0.8
    mu = 0.7
    oracle, _ = quad(lambda r: -math.exp(-mu * r) * math.sin(k * r), 0.0, 200.0)
    oracle /= 2.0 * math.pi**2 * k
    assert yukawa_vft(1.0, mu, k) == pytest.approx(oracle, rel=1e-9)
    # mu -> 0 extrapolation approaches the unscreened transform
    assert yukawa_vft(1.0, 1e-5, 1.0) == pytest.approx(yukawa_vft(1.0, 0.0, 1.0), rel=1e-9)
    with pytest.raises(DomainError):
        yukawa_vft(1.0, -1.0, 1.0)


def test_partial_wave_constant_kernel():
    flat = PartialWaveKernel(l=0, v_ft=lambda k: 0.25 + 0.0 * k)
    assert partial_wave(flat, 1.0, 2.0) == pytest.approx(math.pi, rel=1e-14)
    odd = PartialWaveKernel(l=1, v_ft=lambda k: 0.25 + 0.0 * k)
    assert abs(partial_wave(odd, 1.0, 2.0)) < 1e-14


def test_partial_wave_gaussian_against_composite_rule():
    kernel = gaussian_kernel(3.0, 1.0, l=0)
    p = pp = 1.0
    t = np.linspace(-1.0, 1.0, 10001)
    integrand = gaussian_vft(3.0, 1.0, np.sqrt(p * p + pp * pp - 2.0 * p * pp * t))
    oracle = 2.0 * math.pi * np.trapezoid(integrand, t)
    assert partial_wave(kernel, p, pp) == pytest.approx(oracle, rel=1e-8)


def test_partial_wave_symmetry():
    kernel = gaussian_kernel(3.0, 1.0, l=2)
    for p, pp in ((0.3, 1.7), (1.0, 4.0), (2.5, 2.6)):
        assert partial_wave(kernel, p, pp) == pytest.approx(
            partial_wave(kernel, pp, p), rel=1e-12
        )


def test_partial_wave_order_convergence():
    coarse = gaussian_kernel(3.0, 1.0, l=0, quadrature_order=100)
    fine = gaussian_kernel(3.0, 1.0, l=0, quadrature_order=200)
    for p, pp in ((1.0, 1.0), (0.5, 1.5)):
        a = partial_wave(coarse, p, pp)
        b = partial_wave(fine, p, pp)
        assert abs(a - b) <= 1e-9 * abs(b)


def test_coulomb_partial_wave_closed_form():
    # -(1/(2 pi)) Q_0(5/4) = -ln(9)/(4 pi)
    want = -math.log(9.0) / (4.0 * math.pi)
    assert coulomb_partial_wave(1.0, 0, 1.0, 2.0) == pytest.approx(want, rel=1e-13)
    with pytest.raises(SingularityError):
        coulomb_partial_wave(1.0, 0, 1.3, 1.3)
    with pytest.raises(DomainError):
        coulomb_partial_wave(1.0, 0, -1.0, 1.0)


def test_coulomb_matches_numeric_unscreened_kernel():
    numeric = PartialWaveKernel(l=0, v_ft=lambda k: yukawa_vft(1.0, 0.0, k))
    closed = coulomb_partial_wave(1.0, 0, 1.0, 3.0)
    assert partial_wave(numeric, 1.0, 3.0) == pytest.approx(closed, rel=1e-6)


def test_yukawa_kernel_closed_form_matches_numeric():
    kernel = yukawa_kernel(2.0, 0.5, l=1)
    for p, pp in ((0.7, 1.9), (1.2, 1.2)):
        closed = kernel_value(kernel, p, pp)
        numeric = partial_wave(kernel, p, pp)
        assert closed == pytest.approx(numeric, rel=1e-10)
    # zero screening degrades to the Coulomb kernel
    assert yukawa_kernel(1.0, 0.0, l=0).v_l is not None


def test_direct_matrix_zero_kernel():
    mesh = build_mesh(6, 0.7)
    flat = PartialWaveKernel(l=0, v_ft=lambda k: 0.0 * k)
    assert np.all(direct_potential_matrix(mesh, flat).data == 0.0)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_direct_matrix_coulomb_raises(n):
    mesh = build_mesh(n, 0.5)
    with pytest.raises(SingularityError, match="does not exist"):
        direct_potential_matrix(mesh, coulomb_kernel(1.0, 0))


def test_direct_matrix_matches_spectral_route():
    # at matched scale the two potential constructions agree closely on the
    # ground state long before either has fully converged
    model = gaussian_comparison_model(l=0)
    mesh = build_mesh(30, 0.4)
    spectral = solve(mesh, model, 1).energies[0]
    direct = direct_potential_matrix(mesh, gaussian_kernel(3.0, 1.0, l=0))
    kin = kinetic_matrix(mesh, model.kinetic)
    direct_e = np.linalg.eigvalsh(kin.data + direct.data)[0]
    assert direct_e == pytest.approx(spectral, abs=5e-7)


def test_kernel_validation():
    with pytest.raises(DomainError):
        PartialWaveKernel(l=0)
    with pytest.raises(DomainError):
        PartialWaveKernel(l=-1, v_ft=lambda k: k)
    with pytest.raises(DomainError):
        PartialWaveKernel(l=0, v_ft=lambda k: k, quadrature_order=0)
    closed_only = coulomb_kernel(1.0, 0)
    with pytest.raises(DomainError):
        partial_wave(closed_only, 1.0, 2.0)
    bad = gaussian_kernel(1.0, 1.0, l=0)
    with pytest.raises(DomainError):
        partial_wave(bad, 0.0, 1.0)
