"""Tests for the three representations of u_s and its derivatives."""

import math

import numpy as np
import pytest

from pdum.cnoidal.basis import (
    coeff_scale,
    elliptic_form,
    eval_grid,
    eval_u,
    fourier_coeff,
    fourier_series,
    representation_used,
    soliton_train,
    truncation_K,
)
from pdum.cnoidal.special_fns import jacobi_sn_cn_dn
from pdum.cnoidal.types import CapabilityError, CnoidalParam, DomainError, EllipticConvention, FourierCoeffs, RepPolicy

GRID_32 = 2.0 * math.pi * np.arange(32) / 32


def test_fourier_coeff_values():
    """Test U_0(0) = s/pi, U_n(0) = 0 for n > 0 and a direct value."""
    param = CnoidalParam(1.5)
    assert fourier_coeff(param, 0, 0) == pytest.approx(1.5 / math.pi, rel=1e-15)
    assert fourier_coeff(param, 3, 0) == 0.0
    assert fourier_coeff(param, 2, 3) == pytest.approx(27.0 / math.sinh(3 * math.pi / 1.5), rel=1e-14)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 6])
def test_fourier_coeff_parity(n):
    """Test U_n(-k) = (-1)^n U_n(k)."""
    coeffs = FourierCoeffs(CnoidalParam(0.8), n)
    ks = np.arange(1, 12)
    assert np.allclose(coeffs.values(-ks), (-1) ** n * coeffs.values(ks), rtol=1e-15, atol=0.0)


def test_fourier_coeff_no_overflow():
    """Test that huge wavenumbers underflow to 0 instead of producing nan."""
    values = FourierCoeffs(CnoidalParam(0.1), 4).values(np.array([10_000, 100_000]))
    assert np.all(values == 0.0)


@pytest.mark.parametrize("s", [0.3, 1.0, 3.0])
@pytest.mark.parametrize("tol", [1e-6, 1e-12])
def test_truncation_K_meets_tolerance(s, tol):
    """Test that the neglected coefficients beyond K sum below tol."""
    param = CnoidalParam(s)
    K = truncation_K(param, 1, tol)
    ks = np.arange(K + 1, K + 2000)
    tail = 2.0 * np.abs(FourierCoeffs(param, 1).values(ks)).sum()
    assert K >= 1
    assert tail < tol


@pytest.mark.parametrize("tol", [0.0, 1.0, -1e-3, 2.0])
def test_truncation_K_domain(tol):
    """Test that tolerances outside (0, 1) raise."""
    with pytest.raises(DomainError):
        truncation_K(CnoidalParam(1.0), 0, tol)


def test_truncation_K_against_twenty_more_terms():
    """Test that adding 20 more terms past K = truncation_K(1, 0, 1e-12) changes u_s by less than 1e-12."""
    param = CnoidalParam(1.0)
    K = truncation_K(param, 0, 1e-12)
    x = np.linspace(-math.pi, math.pi, 101)
    assert np.max(np.abs(fourier_series(param, x, 0, K) - fourier_series(param, x, 0, K + 20))) < 1e-12


def test_small_s_limit_is_a_cosine():
    """Test that for s = 0.2 the k = 1 mode carries all but 16/sinh(2 pi/s) of u_s - s/pi."""
    s = 0.2
    param = CnoidalParam(s)
    x = np.linspace(-math.pi, math.pi, 129)
    leading = 2.0 * np.cos(x) / math.sinh(math.pi / s)
    remainder = eval_grid(param, x) - s / math.pi - leading
    assert np.max(np.abs(remainder)) <= 16.0 / math.sinh(2.0 * math.pi / s)
    assert np.max(np.abs(leading)) > 1e5 * np.max(np.abs(remainder))


@pytest.mark.parametrize("s, n", [(5.0, 16), (10.0, 12), (20.0, 16), (3.0, 24)])
def test_high_order_large_s_evaluation(s, n):
    """Test high derivatives at large s, where sum |U_n(k)| far exceeds 1, against a long fixed-K sum."""
    param = CnoidalParam(s)
    x = np.array([0.0, 0.3, 2.0])
    values = fourier_series(param, x, n)
    reference = fourier_series(param, x, n, K=4000)
    scale = coeff_scale(param, n)
    assert scale > 1e17
    assert np.all(np.isfinite(values))
    assert np.allclose(values, reference, rtol=0.0, atol=1e-13 * scale)
    if n <= 16:
        assert eval_u(param, 0.3, n) == pytest.approx(float(values[1]), rel=1e-14, abs=1e-15 * scale)


@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_three_representations_agree(s):
    """Test Fourier, soliton-train and elliptic forms of u_s agree on a 32-point grid."""
    param = CnoidalParam(s)
    fourier = fourier_series(param, GRID_32, 0)
    soliton = soliton_train(param, GRID_32, 0)
    elliptic = elliptic_form(param, GRID_32)
    assert np.max(np.abs(fourier - soliton)) < 1e-9
    assert np.max(np.abs(fourier - elliptic)) < 1e-9
    print(f"\n✓ s={s}: representations agree to {np.max(np.abs(fourier - elliptic)):.2e}")


@pytest.mark.parametrize("n", [1, 2])
def test_soliton_derivatives_match_fourier(n):
    """Test the closed-form soliton derivatives against Fourier synthesis."""
    param = CnoidalParam(2.0)
    assert np.max(np.abs(soliton_train(param, GRID_32, n) - fourier_series(param, GRID_32, n))) < 1e-9


def test_elliptic_form_via_dn():
    """Test u_s = s/pi - 2KE/pi^2 + (2K^2/pi^2) dn^2(Kx/pi) with dn from the Jacobi triple."""
    param = CnoidalParam(0.7)
    mod = param.modulus
    x = np.linspace(-3.0, 3.0, 13)
    dn = np.array([jacobi_sn_cn_dn(mod.K * xi / math.pi, mod.m)[2] for xi in x])
    expected = param.mean - 2 * mod.K * mod.E / math.pi**2 + 2 * mod.K**2 / math.pi**2 * dn**2
    assert np.allclose(elliptic_form(param, x), expected, rtol=0.0, atol=1e-13)


def test_elliptic_form_peaks_at_origin():
    """Test that u_s is maximal at x = 0 and minimal at x = pi."""
    param = CnoidalParam(1.0)
    x = np.linspace(-math.pi, math.pi, 65)
    values = elliptic_form(param, x)
    assert values[32] == pytest.approx(values.max(), abs=1e-15)
    assert values[0] == pytest.approx(values.min(), abs=1e-15)


def test_literal_convention_breaks_elliptic_form():
    """Test that the literal sin integrand does not reproduce u_s."""
    param = CnoidalParam(1.0)
    literal = elliptic_form(param, GRID_32, convention=EllipticConvention.LITERAL_SINE)
    assert np.max(np.abs(literal - fourier_series(param, GRID_32, 0))) > 1e-3


@pytest.mark.parametrize("n", [0, 1, 2, 3, 5])
def test_derivative_parity(n):
    """Test u^(n)(-x) = (-1)^n u^(n)(x)."""
    param = CnoidalParam(0.9)
    x = np.linspace(0.1, 3.0, 9)
    assert np.allclose(eval_grid(param, -x, n), (-1) ** n * eval_grid(param, x, n), rtol=0.0, atol=1e-13)


def test_periodicity_and_large_x():
    """Test u^(n)(x + 2 pi k) = u^(n)(x) for large shifts."""
    param = CnoidalParam(1.2)
    x = np.array([0.3, 1.7])
    for n in (0, 1):
        assert np.allclose(eval_grid(param, x + 2 * math.pi * 1000, n), eval_grid(param, x, n), atol=1e-10)


def test_mean_is_s_over_pi():
    """Test the grid mean of u_s equals s/pi."""
    x = 2.0 * math.pi * np.arange(256) / 256
    assert float(np.mean(eval_grid(CnoidalParam(1.0), x))) == pytest.approx(1.0 / math.pi, rel=1e-14)


def test_derivative_against_finite_difference():
    """Test u' against a centred difference of u."""
    param = CnoidalParam(0.6)
    h = 1e-5
    x = np.array([0.4, 2.2])
    fd = (eval_grid(param, x + h) - eval_grid(param, x - h)) / (2 * h)
    assert np.allclose(eval_grid(param, x, 1), fd, atol=1e-8)


def test_eval_u_scalar():
    """Test scalar evaluation and the odd derivative at the origin."""
    param = CnoidalParam(1.0)
    assert eval_u(param, 0.0, 1) == pytest.approx(0.0, abs=1e-15)
    assert eval_u(param, 0.5) == pytest.approx(float(eval_grid(param, np.array([0.5]))[0]), rel=1e-15)


def test_order_caps():
    """Test the derivative cap and the soliton-train order limit."""
    param = CnoidalParam(1.0)
    with pytest.raises(DomainError):
        eval_grid(param, GRID_32, -1)
    with pytest.raises(CapabilityError):
        eval_grid(param, GRID_32, 17)
    with pytest.raises(CapabilityError):
        soliton_train(param, GRID_32, 3)
    assert np.all(np.isfinite(fourier_series(param, GRID_32, 20)))


@pytest.mark.parametrize(
    "s, policy, n, expected",
    [
        (0.5, RepPolicy.AUTO, 0, RepPolicy.FOURIER),
        (1.0, RepPolicy.AUTO, 0, RepPolicy.FOURIER),
        (2.0, RepPolicy.AUTO, 0, RepPolicy.SOLITON_TRAIN),
        (2.0, RepPolicy.AUTO, 3, RepPolicy.FOURIER),
        (2.0, RepPolicy.ELLIPTIC, 0, RepPolicy.ELLIPTIC),
        (2.0, RepPolicy.ELLIPTIC, 1, RepPolicy.FOURIER),
        (0.5, RepPolicy.SOLITON_TRAIN, 2, RepPolicy.SOLITON_TRAIN),
    ],
)
def test_representation_selection(s, policy, n, expected):
    """Test which representation eval_grid uses."""
    assert representation_used(CnoidalParam(s, policy), n) is expected


def test_policies_agree_through_eval_grid():
    """Test that every policy yields the same values through eval_grid."""
    reference = eval_grid(CnoidalParam(2.0, RepPolicy.FOURIER), GRID_32)
    for policy in (RepPolicy.AUTO, RepPolicy.SOLITON_TRAIN, RepPolicy.ELLIPTIC):
        assert np.allclose(eval_grid(CnoidalParam(2.0, policy), GRID_32), reference, rtol=0.0, atol=1e-10)


def test_coeff_scale_bounds_u():
    """Test that sum_k |U_n(k)| bounds |u^(n)| on the grid."""
    param = CnoidalParam(1.0)
    for n in (0, 2):
        assert np.max(np.abs(eval_grid(param, GRID_32, n))) <= coeff_scale(param, n) * (1 + 1e-12)
