import math

import numpy as np
import pytest
from scipy.special import roots_laguerre

from lagmesh import DomainError, build_mesh, quadrature_sum
from lagmesh.errors import ConvergenceError


def test_single_point_mesh():
    mesh = build_mesh(1, 1.0)
    assert mesh.nodes == pytest.approx([1.0], abs=1e-15)
    # lambda_1 = e^{x_1} w_1 with w_1 = 1
    assert mesh.weights == pytest.approx([math.e], rel=1e-14)


def test_two_point_mesh_closed_forms():
    mesh = build_mesh(2, 1.0)
    assert mesh.nodes == pytest.approx([2.0 - math.sqrt(2.0), 2.0 + math.sqrt(2.0)], rel=1e-14)
    lam1 = math.exp(2.0 - math.sqrt(2.0)) * (2.0 + math.sqrt(2.0)) / 4.0
    lam2 = math.exp(2.0 + math.sqrt(2.0)) * (2.0 - math.sqrt(2.0)) / 4.0
    assert mesh.weights == pytest.approx([lam1, lam2], rel=1e-13)


@pytest.mark.parametrize("n", [1, 2, 5, 20, 100, 300])
def test_weights_integrate_unit_exponential(n):
    mesh = build_mesh(n, 0.5)
    assert quadrature_sum(mesh, np.exp(-mesh.nodes)) == pytest.approx(1.0, rel=1e-12)


def test_quadrature_sum_cubic_exact_and_quartic_inexact():
    mesh = build_mesh(2, 1.0)
    x = mesh.nodes
    assert quadrature_sum(mesh, x**3 * np.exp(-x)) == pytest.approx(6.0, rel=1e-13)
    # degree 4 exceeds the 2N-1 = 3 exactness bound; the two-point rule
    # returns 24 - (2!)^2 = 20 (elementary quadrature-error computation)
    quartic = quadrature_sum(mesh, x**4 * np.exp(-x))
    assert quartic == pytest.approx(20.0, rel=1e-12)
    assert abs(quartic - 24.0) > 1.0


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12, 16, 20])
def test_exactness_up_to_degree_2n_minus_1(n):
    mesh = build_mesh(n, 1.0)
    x = mesh.nodes
    damp = np.exp(-x)
    for degree in range(2 * n):
        got = quadrature_sum(mesh, x**degree * damp)
        assert got == pytest.approx(math.factorial(degree), rel=1e-10), degree


@pytest.mark.parametrize("n", [10, 25, 50])
def test_nodes_interlace_previous_degree(n):
    ours = build_mesh(n, 1.0).nodes
    prev, _ = roots_laguerre(n - 1)
    assert np.all(ours[:-1] < prev) and np.all(prev < ours[1:])


@pytest.mark.parametrize("n", [2, 10, 30, 50])
def test_log_weights_match_golub_welsch(n):
    mesh = build_mesh(n, 1.0)
    nodes, weights = roots_laguerre(n)
    np.testing.assert_allclose(mesh.nodes, nodes, rtol=1e-12)
    np.testing.assert_allclose(np.exp(mesh.log_weights - mesh.nodes), weights, rtol=1e-10)


@pytest.mark.parametrize("n", [10, 50, 150, 300])
def test_nodes_are_laguerre_roots(n):
    from lagmesh.kernels import _laguerre_pair_numpy

    mesh = build_mesh(n, 0.5)
    x = mesh.nodes
    _, ln, lnm1 = _laguerre_pair_numpy(n, x)
    deriv = n * (ln - lnm1) / x
    # Newton residual |L_n(x_k)| relative to the derivative scale x_k |L_n'|
    assert np.all(np.abs(ln) < 1e-12 * np.abs(x * deriv))


def test_mesh_300_against_50_digit_oracle():
    mpmath = pytest.importorskip("mpmath")
    mp = mpmath.mp
    n = 300
    mesh = build_mesh(n, 0.5)
    assert np.all(np.isfinite(mesh.log_weights))
    with mpmath.workdps(50):
        polished = []
        for x0 in mesh.nodes:
            x = mpmath.mpf(float(x0))
            for _ in range(6):
                lm, lc = mpmath.mpf(1), 1 - x
                for k in range(1, n):
                    lm, lc = lc, ((2 * k + 1 - x) * lc - k * lm) / (k + 1)
                step = x * lc / (n * (lc - lm))
                x -= step
                if abs(step) < mpmath.mpf(10) ** (-40) * x:
                    break
            polished.append(x)
        rel = [abs(mpmath.mpf(float(a)) - b) / b for a, b in zip(mesh.nodes, polished)]
        assert max(rel) < mpmath.mpf(1e-10)
        # spot-check the log-weight formula at 50 digits on a few indices
        lg = 2 * mpmath.loggamma(n + 1)
        for k in (0, 137, 299):
            s = mpmath.mpf(0)
            for j in range(n):
                if j != k:
                    s += mpmath.log(abs(polished[k] - polished[j]))
            lw = polished[k] - mpmath.log(polished[k]) + lg - 2 * s
            assert abs(lw - mpmath.mpf(float(mesh.log_weights[k]))) < mpmath.mpf(1e-9) * abs(lw)


def test_low_degree_exactness_at_n300():
    mesh = build_mesh(300, 0.5)
    x = mesh.nodes
    for degree in (0, 1, 5, 10):
        value = np.exp(mesh.log_weights - x + degree * np.log(x)).sum()
        assert value == pytest.approx(math.factorial(degree), rel=1e-10)


def test_domain_errors():
    with pytest.raises(DomainError):
        build_mesh(0, 1.0)
    with pytest.raises(DomainError):
        build_mesh(-3, 1.0)
    with pytest.raises(DomainError):
        build_mesh(5, 0.0)
    with pytest.raises(DomainError):
        build_mesh(5, -1.0)
    with pytest.raises(DomainError):
        build_mesh(5, math.inf)


def test_quadrature_sum_length_mismatch():
    mesh = build_mesh(4, 1.0)
    with pytest.raises(DomainError):
        quadrature_sum(mesh, np.ones(5))


def test_with_h_rescales_only_h():
    mesh = build_mesh(7, 0.5)
    other = mesh.with_h(2.0)
    assert other.h == 2.0
    assert other.nodes is mesh.nodes
    with pytest.raises(DomainError):
        mesh.with_h(-1.0)


def test_mesh_arrays_are_frozen():
    mesh = build_mesh(5, 1.0)
    with pytest.raises(ValueError):
        mesh.nodes[0] = 99.0
