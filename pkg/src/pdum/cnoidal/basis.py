"""Evaluation of u_s and its derivatives in the Fourier, soliton-train and elliptic representations.

u_s is the 2pi-periodic function

* ``u_s(x) = sum_k k / sinh(k pi / s) e^{-ikx}`` (k = 0 term ``s / pi``),
* ``u_s(x) = (s^2 / 2) sum_n sech^2((s/2)(x - 2 pi n))``,
* ``u_s(x) = s/pi + 2K^2(1-m)/pi^2 - 2KE/pi^2 + (2 m K^2/pi^2) cn^2(K x / pi; m)`` with
  ``s = K(m) / K(1 - m)``.
"""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike

from pdum.cnoidal.special_fns import _jacobi_reduced, modulus_from_s_literal
from pdum.cnoidal.types.constants import DERIVATIVE_CAP, EVAL_RTOL, REP_SWITCH_S, SOLITON_IMAGE_TOL
from pdum.cnoidal.types.exceptions import CapabilityError, DomainError
from pdum.cnoidal.types.param import (
    ELLIPTIC_CONVENTION,
    CnoidalParam,
    EllipticConvention,
    FourierCoeffs,
    RepPolicy,
)

if TYPE_CHECKING:
    from numpy.typing import NDArray

logger = logging.getLogger(__name__)

_TWO_PI = 2.0 * math.pi


def fourier_coeff(param: CnoidalParam, n: int, k: int) -> float:
    """Fourier coefficient ``U_n(k) = k^(1+n) / sinh(k pi / s)`` of ``u_s^(n)``.

    Parameters
    ----------
    param : CnoidalParam
        Cnoidal parameter.
    n : int
        Derivative order.
    k : int
        Wavenumber; ``k = 0`` gives ``s / pi`` for ``n = 0`` and 0 otherwise.

    Returns
    -------
    float
        The coefficient.

    Examples
    --------
    >>> round(fourier_coeff(CnoidalParam(1.0), 0, 0), 15) == round(1 / math.pi, 15)
    True
    """
    return FourierCoeffs(param, n)(k)


def _bound_table(param: CnoidalParam, n: int, tol: float) -> np.ndarray:
    """Tail bounds for k = 1..kmax with kmax past the point where the remainder is below ``tol``."""

    coeffs = FourierCoeffs(param, n)
    lam = param.lambda_
    kmax = max(16, int(math.ceil(2 * (n + 1) / lam)))
    while True:
        ratio = ((kmax + 1) / kmax) ** (n + 1) * math.exp(-lam)
        last = float(coeffs.tail_bound(kmax))
        if ratio < 1.0 and last / (1.0 - ratio) < 1e-3 * tol:
            break
        kmax *= 2
    return coeffs.tail_bound(np.arange(1, kmax + 1))


def _truncation_index(param: CnoidalParam, n: int, tol: float) -> int:
    bounds = _bound_table(param, n, tol)
    # tails[K] = 2 * sum_{k > K} bound(k), K = 0..kmax
    tails = 2.0 * np.concatenate([np.cumsum(bounds[::-1])[::-1], [0.0]])
    below = np.nonzero(tails < tol)[0]
    return max(1, int(below[0]))


def truncation_K(param: CnoidalParam, n: int, tol: float) -> int:
    """Smallest K such that the coefficient tail bound beyond ``|k| > K`` sums below ``tol``.

    Parameters
    ----------
    param : CnoidalParam
        Cnoidal parameter.
    n : int
        Derivative order.
    tol : float
        Absolute tolerance, ``0 < tol < 1``.

    Returns
    -------
    int
        Truncation index ``K >= 1``.

    Raises
    ------
    DomainError
        If ``tol`` lies outside (0, 1).
    """
    if not (0.0 < tol < 1.0):
        raise DomainError(f"tolerance must lie in (0, 1), got {tol!r}")
    return _truncation_index(param, n, tol)


def coeff_scale(param: CnoidalParam, n: int) -> float:
    """``sum_k |U_n(k)|`` over all integers k."""

    ks = np.arange(1, len(_bound_table(param, n, 1e-17)) + 1)
    coeffs = FourierCoeffs(param, n)
    return float(2.0 * np.abs(coeffs.values(ks)).sum() + abs(coeffs(0)))


def _eval_tol(param: CnoidalParam, n: int) -> float:
    return EVAL_RTOL * max(1.0, coeff_scale(param, n))


def _reduce(x: NDArray[np.float64]) -> NDArray[np.float64]:
    return x - _TWO_PI * np.round(x / _TWO_PI)


def fourier_series(param: CnoidalParam, x: ArrayLike, n: int, K: int | None = None) -> NDArray[np.float64]:
    """Fourier synthesis of ``u_s^(n)`` on ``x`` (no derivative cap).

    ``u_s^(n)(x) = delta_{n0} s/pi + 2 sum_{k=1}^{K} U_n(k) cos(k x + n pi / 2)``.
    """
    if n < 0:
        raise DomainError(f"derivative order must be non-negative, got {n}")
    if K is None:
        # scales with sum |U_n(k)| and may exceed 1
        K = _truncation_index(param, n, _eval_tol(param, n))
    xr = _reduce(np.atleast_1d(np.asarray(x, dtype=np.float64)))
    ks = np.arange(1, K + 1, dtype=np.float64)
    weights = 2.0 * FourierCoeffs(param, n).values(ks)
    phase = np.outer(xr, ks)
    quadrant = n % 4
    if quadrant == 0:
        basis = np.cos(phase)
    elif quadrant == 1:
        basis = -np.sin(phase)
    elif quadrant == 2:
        basis = -np.cos(phase)
    else:
        basis = np.sin(phase)
    values = basis @ weights
    if n == 0:
        values = values + param.mean
    return values.reshape(np.shape(x))


def soliton_train(param: CnoidalParam, x: ArrayLike, n: int) -> NDArray[np.float64]:
    """``u_s^(n)`` as a periodic train of sech^2 solitons, ``n`` in {0, 1, 2}."""

    if n not in (0, 1, 2):
        raise CapabilityError(f"soliton train supports derivative orders 0, 1, 2; got {n}")
    s = param.s
    xr = _reduce(np.atleast_1d(np.asarray(x, dtype=np.float64)))
    reach = (2.0 / s) * math.log(4.0 / SOLITON_IMAGE_TOL)
    images = int(math.ceil((reach + math.pi) / _TWO_PI))
    js = np.arange(-images, images + 1, dtype=np.float64)
    y = 0.5 * s * (xr[:, None] - _TWO_PI * js[None, :])
    e = np.exp(-2.0 * np.abs(y))
    sech2 = 4.0 * e / (1.0 + e) ** 2
    if n == 0:
        values = 0.5 * s**2 * sech2.sum(axis=1)
    elif n == 1:
        values = -0.5 * s**3 * (sech2 * np.tanh(y)).sum(axis=1)
    else:
        values = 0.125 * s**4 * (4.0 * sech2 - 6.0 * sech2**2).sum(axis=1)
    return values.reshape(np.shape(x))


def elliptic_form(
    param: CnoidalParam,
    x: ArrayLike,
    *,
    convention: EllipticConvention = ELLIPTIC_CONVENTION,
) -> NDArray[np.float64]:
    """``u_s`` through the Jacobi function cn (value only).

    Parameters
    ----------
    param : CnoidalParam
        Cnoidal parameter.
    x : ArrayLike
        Evaluation points.
    convention : EllipticConvention, optional
        Elliptic-integral convention used for K, E and the s <-> m map.
    """
    if convention is EllipticConvention.LITERAL_SINE:
        mod = modulus_from_s_literal(param.s)
    else:
        mod = param.modulus
    K, E, m, mc = mod.K, mod.E, mod.m, mod.mc
    offset = param.mean + 2.0 * K**2 * mc / math.pi**2 - 2.0 * K * E / math.pi**2
    amplitude = 2.0 * m * K**2 / math.pi**2
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    cn = np.array([_jacobi_reduced(K * xi / math.pi, m, mc)[1] for xi in xs.ravel()])
    return (offset + amplitude * cn**2).reshape(np.shape(x))


def _resolve(param: CnoidalParam, n: int) -> RepPolicy:
    policy = param.rep_policy
    if policy is RepPolicy.AUTO:
        policy = RepPolicy.FOURIER if param.s <= REP_SWITCH_S else RepPolicy.SOLITON_TRAIN
    if policy is RepPolicy.SOLITON_TRAIN and n > 2:
        logger.debug("soliton train has no closed form for n=%d; using Fourier", n)
        return RepPolicy.FOURIER
    if policy is RepPolicy.ELLIPTIC and n > 0:
        logger.debug("elliptic form is value-only; using Fourier for n=%d", n)
        return RepPolicy.FOURIER
    return policy


def _check_order(n: int) -> None:
    if n < 0:
        raise DomainError(f"derivative order must be non-negative, got {n}")
    if n > DERIVATIVE_CAP:
        raise CapabilityError(f"derivative order {n} exceeds cap {DERIVATIVE_CAP}")


def eval_grid(param: CnoidalParam, x: ArrayLike, n: int = 0) -> NDArray[np.float64]:
    """Evaluate ``u_s^(n)`` on an array of points with the representation chosen by ``param``.

    Parameters
    ----------
    param : CnoidalParam
        Cnoidal parameter and representation policy.
    x : ArrayLike
        Evaluation points.
    n : int, default 0
        Derivative order, at most 16.

    Returns
    -------
    numpy.ndarray
        Values with the shape of ``x``.

    Raises
    ------
    CapabilityError
        If ``n`` exceeds the derivative cap.
    """
    _check_order(n)
    policy = _resolve(param, n)
    if policy is RepPolicy.SOLITON_TRAIN:
        return soliton_train(param, x, n)
    if policy is RepPolicy.ELLIPTIC:
        return elliptic_form(param, x)
    return fourier_series(param, x, n)


def eval_u(param: CnoidalParam, x: float, n: int = 0) -> float:
    """Evaluate ``u_s^(n)(x)`` at a single point.

    Examples
    --------
    >>> abs(eval_u(CnoidalParam(1.0), 0.0, 1))
    0.0
    """
    return float(eval_grid(param, np.asarray([x], dtype=np.float64), n)[0])


def representation_used(param: CnoidalParam, n: int) -> RepPolicy:
    """Representation :func:`eval_grid` uses for ``param`` and order ``n``."""

    _check_order(n)
    return _resolve(param, n)


__all__ = [
    "coeff_scale",
    "elliptic_form",
    "eval_grid",
    "eval_u",
    "fourier_coeff",
    "fourier_series",
    "representation_used",
    "soliton_train",
    "truncation_K",
]
