import math

import numpy as np
import pytest
from scipy.special import eval_laguerre, eval_legendre, gammaln, spherical_jn

from lagmesh import (
    DomainError,
    SignedLogReal,
    SingularityError,
    laguerre,
    legendre_p,
    legendre_q,
    log_gamma,
    spherical_bessel_j,
)


@pytest.mark.parametrize("value", [1.0, -2.5, 3e-200, -7e150, 0.0, 123.456])
def test_signed_log_round_trip(value):
    slr = SignedLogReal.from_real(value)
    assert slr.to_real() == pytest.approx(value, rel=1e-13, abs=0.0)
    if value == 0.0:
        assert slr.sign == 0 and slr.log_magnitude == -math.inf


def test_laguerre_base_cases():
    for x in (0.0, 0.7, 5.0, 300.0):
        assert laguerre(0, x).to_real() == 1.0
    assert abs(laguerre(1, 1.0).to_real()) < 1e-15
    root = 2.0 - math.sqrt(2.0)
    # magnitude scale of L_2 near its root is O(1)
    assert abs(laguerre(2, root).to_real()) < 1e-12


@pytest.mark.parametrize("n", [1, 3, 7, 15, 40])
def test_laguerre_matches_scipy_moderate_range(n):
    for x in (0.0, 0.3, 2.0, 17.5, 80.0):
        want = eval_laguerre(n, x)
        got = laguerre(n, x).to_real()
        assert got == pytest.approx(want, rel=1e-10, abs=1e-300)


@pytest.mark.parametrize("n", [5, 50, 150, 299])
@pytest.mark.parametrize("x", [0.1, 3.7, 55.0, 400.0, 1200.0])
def test_laguerre_recurrence_residual(n, x):
    # (n+1) L_{n+1} - (2n+1-x) L_n + n L_{n-1} = 0, checked in a common scale
    trio = [laguerre(k, x) for k in (n - 1, n, n + 1)]
    ref = max(t.log_magnitude for t in trio if t.sign != 0)
    vals = [t.sign * math.exp(t.log_magnitude - ref) if t.sign else 0.0 for t in trio]
    residual = (n + 1) * vals[2] - (2 * n + 1 - x) * vals[1] + n * vals[0]
    scale = abs((n + 1) * vals[2]) + abs((2 * n + 1 - x) * vals[1]) + abs(n * vals[0])
    assert abs(residual) <= 1e-10 * scale


def test_laguerre_domain():
    with pytest.raises(DomainError):
        laguerre(-1, 1.0)
    with pytest.raises(DomainError):
        laguerre(3, -0.5)


def test_legendre_p_basics():
    assert legendre_p(0, -0.3) == 1.0
    assert legendre_p(1, 0.5) == 0.5
    assert legendre_p(2, 1.0) == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("l", [0, 1, 2, 3, 5, 8])
def test_legendre_p_matches_scipy(l):
    t = np.linspace(-1.0, 1.0, 41)
    np.testing.assert_allclose(legendre_p(l, t), eval_legendre(l, t), rtol=1e-12, atol=1e-14)


def test_legendre_p_domain():
    with pytest.raises(DomainError):
        legendre_p(2, 1.0 + 1e-9)
    with pytest.raises(DomainError):
        legendre_p(-1, 0.0)


def test_legendre_q_closed_forms():
    assert legendre_q(0, 3.0) == pytest.approx(0.5 * math.log(2.0), rel=1e-14)
    assert legendre_q(1, 2.0) == pytest.approx(math.log(3.0) - 1.0, rel=1e-13)


@pytest.mark.parametrize("z", [1.001, 1.1, 1.5, 2.0, 5.0, 10.0, 1e4])
@pytest.mark.parametrize("l", [0, 1, 2, 3, 5, 12])
def test_legendre_q_matches_mpmath(l, z):
    mpmath = pytest.importorskip("mpmath")
    with mpmath.workdps(40):
        want = complex(mpmath.legenq(l, 0, mpmath.mpf(z), type=3)).real
    assert legendre_q(l, z) == pytest.approx(want, rel=1e-12)


def test_legendre_q_singularity():
    for z in (1.0, 0.5, -2.0):
        with pytest.raises(SingularityError):
            legendre_q(0, z)
        with pytest.raises(SingularityError):
            legendre_q(3, z)


@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_legendre_q_wronskian(l):
    # P_l(z) Q_l'(z) - P_l'(z) Q_l(z) = -1/(z^2 - 1), derivatives by
    # central differences with step 1e-6
    eps = 1e-6
    for z in (1.5, 2.5, 4.0, 10.0):
        qp = (legendre_q(l, z + eps) - legendre_q(l, z - eps)) / (2 * eps)
        # P_l extends polynomially beyond [-1, 1]; use the scipy evaluator there
        pl = eval_legendre(l, z)
        plp = (eval_legendre(l, z + eps) - eval_legendre(l, z - eps)) / (2 * eps)
        wron = pl * qp - plp * legendre_q(l, z)
        assert wron == pytest.approx(-1.0 / (z * z - 1.0), rel=1e-8)


def test_spherical_bessel_limits():
    assert spherical_bessel_j(0, 0.0) == 1.0
    assert spherical_bessel_j(1, 0.0) == 0.0
    assert abs(spherical_bessel_j(0, math.pi)) < 1e-14


@pytest.mark.parametrize("l", [0, 1, 2, 3, 5, 8])
def test_spherical_bessel_matches_scipy(l):
    xs = np.concatenate([np.linspace(1e-6, 2, 20), np.linspace(2, 80, 40)])
    got = np.array([spherical_bessel_j(l, x) for x in xs])
    want = spherical_jn(l, xs)
    np.testing.assert_allclose(got, want, rtol=1e-9, atol=1e-13)


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_spherical_bessel_recurrence(l):
    for x in np.linspace(0.1, 50.0, 25):
        jm = spherical_bessel_j(l - 1, x)
        jc = spherical_bessel_j(l, x)
        jp = spherical_bessel_j(l + 1, x)
        lhs = jm + jp
        rhs = (2 * l + 1) / x * jc
        scale = max(abs(jm), abs(jc), abs(jp), 1e-280)
        assert abs(lhs - rhs) <= 1e-9 * scale


def test_spherical_bessel_domain():
    with pytest.raises(DomainError):
        spherical_bessel_j(-1, 1.0)
    with pytest.raises(DomainError):
        spherical_bessel_j(2, -0.1)


def test_log_gamma():
    assert log_gamma(1.0) == 0.0
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    want = sum(math.log(k) for k in range(1, 101))
    assert log_gamma(101.0) == pytest.approx(want, rel=1e-10)
    assert log_gamma(101.0) == pytest.approx(gammaln(101.0), rel=1e-14)
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)
