"""Tests for the basis threshold, the Lagrange approximant and least-squares projection."""

import math

import numpy as np
import pytest

from pdum.cnoidal.basis import eval_grid
from pdum.cnoidal.projection import (
    basis_threshold,
    design_matrix,
    gram_cross_check,
    gram_matrix,
    lagrange_approximant,
    lagrange_tail,
    project,
)
from pdum.cnoidal.types import CnoidalParam, DomainError, ProjectionSolver

M = 256
GRID = 2.0 * math.pi * np.arange(M) / M


@pytest.mark.parametrize("s, expected", [(0.5, True), (1.0, True), (1.78, True), (1.79, False), (3.0, False)])
def test_basis_threshold(s, expected):
    """Test sinh(pi/(2s)) >= 1 around the crossover s ~ 1.7845."""
    assert basis_threshold(s) is expected


def test_basis_threshold_domain():
    """Test that non-positive s raises."""
    with pytest.raises(DomainError):
        basis_threshold(0.0)


@pytest.mark.parametrize("j", [1, -2, 3])
def test_lagrange_delta_property(j):
    """Test f_j^n(k) = delta_{kj} for 0 < |k| <= n."""
    n = 5
    for k in range(-n, n + 1):
        if k == 0:
            continue
        expected = 1.0 if k == j else 0.0
        assert lagrange_approximant(1.0, j, n, k) == pytest.approx(expected, abs=1e-14)


def test_lagrange_tail_decays():
    """Test the tail sum drops by at least 10x from n = 3 to n = 9."""
    tails = [lagrange_tail(1.0, 1, n) for n in (3, 5, 7, 9)]
    assert all(np.isfinite(tails))
    assert tails[-1] * 10.0 <= tails[0]
    print(f"\n✓ Lagrange tails: {', '.join(f'{t:.3e}' for t in tails)}")


def test_lagrange_domain():
    """Test j = 0, n < |j| and k = 0."""
    with pytest.raises(DomainError):
        lagrange_approximant(1.0, 0, 3, 1)
    with pytest.raises(DomainError):
        lagrange_approximant(1.0, 4, 3, 1)
    with pytest.raises(DomainError):
        lagrange_approximant(1.0, 1, 3, 0)


@pytest.mark.parametrize("s", [0.6, 1.0, 1.5])
def test_gram_matrix(s):
    """Test the Gram matrix is symmetric, matches the identity means and the sampled inner products."""
    N = 5
    gram = gram_matrix(s, N)
    assert gram.shape == (N + 2, N + 2)
    assert np.allclose(gram, gram.T, rtol=0.0, atol=0.0)
    assert gram[0, 0] == 1.0
    assert gram[0, 1] == pytest.approx(s / math.pi, rel=1e-15)
    assert gram_cross_check(s, N) < 1e-12
    A = design_matrix(s, N, GRID)
    sampled = A.T @ A / M
    assert np.allclose(gram, sampled, rtol=1e-10, atol=1e-13)


def test_gram_matrix_domain():
    """Test that negative N raises."""
    with pytest.raises(DomainError):
        gram_matrix(1.0, -1)


@pytest.mark.parametrize("s", [0.6, 1.0, 1.5])
@pytest.mark.parametrize("N", [5, 10])
def test_gram_matrix_is_positive_semidefinite(s, N):
    """Test the unit-diagonal Gram matrix has no eigenvalue below -1e-12."""
    gram = gram_matrix(s, N)
    scale = 1.0 / np.sqrt(np.diag(gram))
    eigenvalues = np.linalg.eigvalsh(gram * np.outer(scale, scale))
    assert eigenvalues.min() >= -1e-12


def test_projection_converges_for_cos3x():
    """Test strictly decreasing residual for cos(3x) at s = 1, below 1e-6 by N = 24."""
    target = np.cos(3.0 * GRID)
    residuals = [project(target, 1.0, N).l2_residual for N in (4, 8, 12, 16, 20, 24)]
    assert all(later < earlier for earlier, later in zip(residuals, residuals[1:]))
    assert residuals[-1] < 1e-6
    print(f"\n✓ cos(3x) residuals: {', '.join(f'{r:.2e}' for r in residuals)}")


def test_projection_reproduces_basis_combination():
    """Test that a combination of the first N basis functions is recovered."""
    rng = np.random.default_rng(7)
    N = 4
    coeffs = rng.uniform(-1.0, 1.0, N + 2)
    target = design_matrix(1.0, N, GRID) @ coeffs
    result = project(target, 1.0, N)
    assert result.gram_condition < 1e12
    assert np.allclose(result.coeffs, coeffs, rtol=1e-8, atol=1e-8)
    assert result.l2_residual < 1e-10


def test_projection_of_derivative():
    """Test that u_s' projects onto its own column."""
    target = eval_grid(CnoidalParam(1.0), GRID, 1)
    result = project(target, 1.0, 3)
    assert result.coeffs[2] == pytest.approx(1.0, abs=1e-8)
    assert max(abs(c) for i, c in enumerate(result.coeffs) if i != 2) < 1e-8


def test_projection_is_contraction():
    """Test residual <= RMS norm of the target."""
    target = np.sign(np.sin(GRID)) + 0.2
    result = project(target, 0.8, 6)
    assert result.l2_residual <= math.sqrt(float(np.mean(target**2))) * (1 + 1e-12)


def test_projection_zero_target():
    """Test that a zero target gives zero coefficients and residual."""
    result = project(np.zeros(64), 1.0, 3)
    assert result.coeffs == (0.0,) * 5
    assert result.l2_residual == 0.0
    assert result.solver is ProjectionSolver.NORMAL


@pytest.mark.parametrize("bad", [np.ones(100), np.ones(32), np.ones((64, 2)), np.full(64, np.nan)])
def test_projection_bad_grid(bad):
    """Test non-power-of-two, short, 2-D and non-finite targets."""
    with pytest.raises(DomainError):
        project(bad, 1.0, 2)


def test_projection_negative_N():
    """Test that negative N raises."""
    with pytest.raises(DomainError):
        project(np.ones(64), 1.0, -1)


def test_projection_threshold_warning():
    """Test that s beyond the basis threshold warns but still projects."""
    result = project(np.cos(GRID), 3.0, 4)
    assert result.warnings
    assert "threshold" in result.warnings[0]
    assert project(np.cos(GRID), 1.0, 4).warnings == ()


@pytest.mark.parametrize("s", [2.0, 3.0])
def test_projection_beyond_threshold_high_order(s):
    """Test that N = 24 beyond the threshold warns and still returns a least-squares fit."""
    target = np.cos(3.0 * GRID)
    result = project(target, s, 24)
    assert "threshold" in result.warnings[0]
    assert result.solver is ProjectionSolver.SVD
    assert np.all(np.isfinite(result.coeffs))
    assert result.l2_residual <= math.sqrt(float(np.mean(target**2))) * (1 + 1e-12)


@pytest.mark.parametrize("solver", [ProjectionSolver.NORMAL, ProjectionSolver.TIKHONOV, ProjectionSolver.SVD])
def test_projection_solvers_agree(solver):
    """Test that every solver gives the same coefficients on a well-conditioned problem."""
    target = np.cos(2.0 * GRID) + 0.5 * np.sin(GRID)
    reference = project(target, 1.0, 4, solver=ProjectionSolver.SVD)
    result = project(target, 1.0, 4, solver=solver)
    assert result.solver is solver
    assert np.allclose(result.coeffs, reference.coeffs, rtol=1e-6, atol=1e-8)


def test_projection_evaluate():
    """Test ProjectionResult.evaluate against the fitted samples."""
    target = np.cos(GRID)
    result = project(target, 1.0, 8)
    fitted = result.evaluate(GRID)
    assert math.sqrt(float(np.mean((fitted - target) ** 2))) == pytest.approx(result.l2_residual, rel=1e-6, abs=1e-14)
