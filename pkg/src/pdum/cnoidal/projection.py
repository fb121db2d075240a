"""Least-squares expansion of periodic functions in ``{1, u_s, u_s', ..., u_s^(N)}``.

The family is a basis of L^2(0, 2pi) whenever ``sinh(pi/(2s)) >= 1``. It is not orthogonal, so the
projection solves a least-squares problem on the sampled, column-normalised basis.
"""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from pdum.cnoidal._helpers import _sum_series
from pdum.cnoidal.basis import _bound_table, fourier_series
from pdum.cnoidal.coefficients import identity_mean
from pdum.cnoidal.types.constants import COEFF_CAP, GRAM_COND_LIMIT, MIN_PROJECTION_GRID, TIKHONOV_SCALE
from pdum.cnoidal.types.exceptions import DomainError
from pdum.cnoidal.types.param import CnoidalParam, FourierCoeffs
from pdum.cnoidal.types.projection import ProjectionResult, ProjectionSolver

if TYPE_CHECKING:
    from numpy.typing import NDArray

logger = logging.getLogger(__name__)


def basis_threshold(s: float) -> bool:
    """True iff ``sinh(pi / (2 s)) >= 1``, the sufficient condition for the basis property.

    Examples
    --------
    >>> basis_threshold(1.78), basis_threshold(1.79)
    (True, False)
    """
    if not s > 0:
        raise DomainError(f"s must be positive, got {s!r}")
    return math.sinh(math.pi / (2.0 * s)) >= 1.0


def _sinh_ratio(lam: float, j: int, k: int) -> float:
    """``sinh(lam j) / sinh(lam k)`` without overflow."""

    aj, ak = abs(j), abs(k)
    sign = math.copysign(1.0, j) * math.copysign(1.0, k)
    return sign * math.exp(lam * (aj - ak)) * (-math.expm1(-2.0 * lam * aj)) / (-math.expm1(-2.0 * lam * ak))


def lagrange_approximant(s: float, j: int, n: int, k: int) -> float:
    """Lagrange interpolant of the Fourier components used to approximate ``e^{-ijx}``.

    ``f_j^n(k) = sinh(lam j)/sinh(lam k) prod_{i=-n, i != 0, j}^{n} (k - i)/(j - i)`` with
    ``lam = pi / s``. For ``0 < |k| <= n`` it equals ``delta_{kj}``.

    Parameters
    ----------
    s : float
        Cnoidal parameter.
    j : int
        Target wavenumber, non-zero.
    n : int
        Interpolation half-width, ``n >= |j|``.
    k : int
        Wavenumber, non-zero.

    Raises
    ------
    DomainError
        If ``j == 0``, ``n < |j|`` or ``k == 0``.
    """
    if j == 0:
        raise DomainError("j must be non-zero")
    if n < abs(j):
        raise DomainError(f"n must be at least |j| = {abs(j)}, got {n}")
    if k == 0:
        raise DomainError("the approximant is undefined at k = 0 (the constant handles it)")
    lam = math.pi / s
    product = 1.0
    for i in range(-n, n + 1):
        if i in (0, j):
            continue
        product *= (k - i) / (j - i)
    return _sinh_ratio(lam, j, k) * product


def lagrange_tail(s: float, j: int, n: int) -> float:
    """``sum_{|k| > n} |f_j^n(k)|^2``."""

    def term(m: int) -> float:
        return lagrange_approximant(s, j, n, n + m) ** 2 + lagrange_approximant(s, j, n, -n - m) ** 2

    total, _, _ = _sum_series(term, start=1, tol=1e-18)
    return total


def gram_matrix(s: float, N: int) -> NDArray[np.float64]:
    """Mean inner products of ``[1, u, u', ..., u^(N)]`` from Parseval sums.

    The entry for ``(u^(a), u^(b))`` is ``(-1)^((a-b)/2) sum_k U_a(k) U_b(k)`` when ``a + b`` is even
    and 0 otherwise; the constant has mean ``s/pi`` against u and 0 against its derivatives.

    Examples
    --------
    >>> float(gram_matrix(1.0, 2)[0, 0])
    1.0
    """
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")
    param = CnoidalParam(s)
    ks = np.arange(1, len(_bound_table(param, 2 * N, 1e-20)) + 1)
    coeffs = [FourierCoeffs(param, order).values(ks) for order in range(N + 1)]
    size = N + 2
    gram = np.zeros((size, size))
    gram[0, 0] = 1.0
    gram[0, 1] = gram[1, 0] = param.mean
    for a in range(N + 1):
        for b in range(a, N + 1):
            if (a + b) % 2:
                continue
            value = 2.0 * math.fsum((coeffs[a] * coeffs[b]).tolist())
            if a == 0 and b == 0:
                value += param.mean**2
            value *= (-1) ** ((b - a) // 2)
            gram[a + 1, b + 1] = gram[b + 1, a + 1] = value
    return gram


def gram_cross_check(s: float, N: int) -> float:
    """Largest relative gap between Parseval Gram entries and the identity means (orders within cap)."""

    gram = gram_matrix(s, N)
    worst = 0.0
    for a in range(min(N, COEFF_CAP) + 1):
        for b in range(a, min(N, COEFF_CAP) + 1):
            expected = identity_mean(a, b, s)
            got = gram[a + 1, b + 1]
            worst = max(worst, abs(got - expected) / max(abs(expected), 1e-300))
    return worst


def design_matrix(s: float, N: int, x: ArrayLike) -> NDArray[np.float64]:
    """Columns ``[1, u, u', ..., u^(N)]`` sampled at ``x``."""

    param = CnoidalParam(s)
    xs = np.asarray(x, dtype=np.float64)
    columns = [np.ones_like(xs)] + [fourier_series(param, xs, order) for order in range(N + 1)]
    return np.stack(columns, axis=-1)


def _check_target(target: NDArray[np.float64]) -> int:
    size = target.shape[0] if target.ndim == 1 else -1
    if size < MIN_PROJECTION_GRID or size & (size - 1):
        raise DomainError(f"target must be a 1-D power-of-two sample grid of length >= 64, got shape {target.shape}")
    if not np.all(np.isfinite(target)):
        raise DomainError("target samples must be finite")
    return size


def project(
    target: ArrayLike,
    s: float,
    N: int,
    *,
    solver: ProjectionSolver = ProjectionSolver.AUTO,
) -> ProjectionResult:
    """Least-squares coefficients of ``target`` in ``{1, u_s, ..., u_s^(N)}``.

    Parameters
    ----------
    target : ArrayLike
        Samples on ``x_i = 2 pi i / M``, ``M`` a power of two, ``M >= 64``.
    s : float
        Cnoidal parameter.
    N : int
        Highest derivative order.
    solver : ProjectionSolver, default ProjectionSolver.AUTO
        ``AUTO`` uses the normal equations when the normalised Gram condition is at most ``1e12``
        and SVD least squares otherwise. SVD works on the sampled basis, whose condition number is
        the square root of the Gram condition, so it loses fewer digits than a Tikhonov-shifted
        Gram solve; ``TIKHONOV`` stays available on request.

    Returns
    -------
    ProjectionResult
        Coefficients (constant first), RMS residual and Gram condition.

    Raises
    ------
    DomainError
        If the grid is not a power of two of length at least 64, or ``N < 0``.
    """
    values = np.asarray(target, dtype=np.float64)
    size = _check_target(values)
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")

    warnings: list[str] = []
    if not basis_threshold(s):
        warnings.append(f"threshold sinh(π/2s)≥1 not met for s={s:g}")
        logger.warning(warnings[-1])

    if not np.any(values):
        chosen = ProjectionSolver.NORMAL if solver is ProjectionSolver.AUTO else solver
        return ProjectionResult(s, N, (0.0,) * (N + 2), 0.0, 1.0, chosen, tuple(warnings))

    x = 2.0 * math.pi * np.arange(size) / size
    A = design_matrix(s, N, x) / math.sqrt(size)
    b = values / math.sqrt(size)
    norms = np.linalg.norm(A, axis=0)
    An = A / norms

    singular = np.linalg.svd(An, compute_uv=False)
    condition = math.inf if singular[-1] == 0.0 else float((singular[0] / singular[-1]) ** 2)

    chosen = solver
    if solver is ProjectionSolver.AUTO:
        chosen = ProjectionSolver.NORMAL if condition <= GRAM_COND_LIMIT else ProjectionSolver.SVD
    logger.debug("project(s=%g, N=%d): condition %.3e, solver %s", s, N, condition, chosen.value)

    if chosen is ProjectionSolver.SVD:
        z, *_ = np.linalg.lstsq(An, b, rcond=None)
    else:
        gram = An.T @ An
        if chosen is ProjectionSolver.TIKHONOV:
            gram = gram + TIKHONOV_SCALE * np.trace(gram) / (N + 2) * np.eye(N + 2)
        z = scipy.linalg.cho_solve(scipy.linalg.cho_factor(gram), An.T @ b)

    coeffs = z / norms
    residual = float(np.linalg.norm(An @ z - b))
    return ProjectionResult(
        s=float(s),
        N=N,
        coeffs=tuple(float(v) for v in coeffs),
        l2_residual=residual,
        gram_condition=condition,
        solver=chosen,
        warnings=tuple(warnings),
    )


__all__ = [
    "basis_threshold",
    "design_matrix",
    "gram_cross_check",
    "gram_matrix",
    "lagrange_approximant",
    "lagrange_tail",
    "project",
]
