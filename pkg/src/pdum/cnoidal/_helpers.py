"""Internal helper functions."""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Callable

from numpy.polynomial import Polynomial

from pdum.cnoidal.types.constants import DEFAULT_TOL, MAX_SERIES_TERMS

logger = logging.getLogger(__name__)


def _sum_series(
    term: Callable[[int], float],
    *,
    start: int = 1,
    tol: float = DEFAULT_TOL,
    max_terms: int = MAX_SERIES_TERMS,
) -> tuple[float, int, float]:
    """Sum ``term(start) + term(start + 1) + ...`` until the tail is negligible.

    Summation stops once three consecutive terms are each below ``tol * |partial|`` and below
    ``tol`` and the geometric tail estimate from the last two terms is below ``tol``.

    Parameters
    ----------
    term : Callable[[int], float]
        Summand as a function of the index.
    start : int, default 1
        First index.
    tol : float
        Termination tolerance.
    max_terms : int
        Hard cap on the number of terms.

    Returns
    -------
    tuple[float, int, float]
        ``(value, terms_used, tail_bound)``.
    """
    total = 0.0
    small_run = 0
    previous = math.inf
    tail = math.inf
    used = 0
    for k in range(start, start + max_terms):
        t = term(k)
        total += t
        used += 1
        mag = abs(t)
        if mag <= tol and mag <= tol * abs(total):
            small_run += 1
        else:
            small_run = 0
        if previous > 0 and mag < previous:
            r = mag / previous
            tail = mag * r / (1.0 - r)
        elif mag == 0.0:
            tail = 0.0
        else:
            tail = math.inf
        previous = mag
        if small_run >= 3 and tail <= tol:
            break
    else:
        logger.warning("series did not converge within %d terms (tail estimate %.3g)", max_terms, tail)
    return total, used, tail


def _inv_sinh2(x: float) -> float:
    """``1/sinh(x)^2`` for ``x > 0`` without overflow."""

    e = math.exp(-2.0 * x)
    return 4.0 * e / (math.expm1(-2.0 * x) ** 2)


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


_W = Polynomial([0.0, 1.0])


@lru_cache(maxsize=None)
def _w_derivative(order: int) -> tuple[bool, Polynomial]:
    """Derivative of ``w(x) = 1/sinh(x)^2`` of the given order as a polynomial in w.

    Even orders are ``P(w)``; odd orders are ``coth(x) Q(w)``. Uses ``w' = -2 coth(x) w``,
    ``coth' = -w`` and ``coth^2 = 1 + w``.

    Returns
    -------
    tuple[bool, Polynomial]
        ``(has_coth, polynomial)``.
    """
    if order == 0:
        return False, _W
    has_coth, poly = _w_derivative(order - 1)
    if not has_coth:
        return True, -2.0 * _W * poly.deriv()
    return False, -_W * poly - 2.0 * _W * (1.0 + _W) * poly.deriv()


def _w_derivative_at(order: int, x: float) -> float:
    """Evaluate ``d^order/dx^order (1/sinh(x)^2)`` at ``x > 0``."""

    has_coth, poly = _w_derivative(order)
    value = float(poly(_inv_sinh2(x)))
    return value * _coth(x) if has_coth else value


def _kappa_derivative_at(order: int, x: float) -> float:
    """Even-order derivative of ``kappa(x) = x cosh(x)/sinh(x)^3 - 1/sinh(x)^2``.

    ``kappa = -(x/2) w' - w``, hence ``kappa^(2n) = -(x/2) w^(2n+1) - (n+1) w^(2n)``.
    """
    if order % 2:
        raise ValueError(f"kappa derivative order must be even, got {order}")
    n = order // 2
    return -0.5 * x * _w_derivative_at(order + 1, x) - (n + 1) * _w_derivative_at(order, x)
