"""Exact periodic travelling waves of the KdV and Kawahara equations.

A travelling wave ``v(z, t) = F(z - c t)`` of ``v_t + v v_z + alpha v_zzz - beta v_zzzzz = 0`` solves,
after one integration, ``F^2 = 2 beta F'''' - 2 alpha F'' + 2 c F + d``. With the ansatz
``F = f1 u_s + f2 u_s''`` the product identities turn this ODE into a finite system for
``f1, f2, c, d`` and s.
"""

from __future__ import annotations

import logging
import math
from dataclasses import replace
from typing import Mapping

import numpy as np
from scipy.optimize import brentq

from pdum.cnoidal._helpers import _inv_sinh2, _sum_series
from pdum.cnoidal.coefficients import F_sum, coeff_table, e_ell
from pdum.cnoidal.types.constants import CONSTRUCTION_TOL, GAMMA_RATIO, ROOT_SCAN, ROOT_XTOL
from pdum.cnoidal.types.exceptions import (
    BracketError,
    ConstructionError,
    DegenerateEquationError,
    DomainError,
    NoSolutionError,
    UnsupportedTransformError,
)
from pdum.cnoidal.types.wave import Equation, KawaharaConstraint, TravellingWave

logger = logging.getLogger(__name__)


def square_expansion(f: Mapping[int, float], s: float) -> tuple[dict[int, float], float]:
    """Expand ``(sum_i f_i u^(i))^2`` as ``sum_n g_n u^(n) + const``.

    Parameters
    ----------
    f : Mapping[int, float]
        Coefficients keyed by derivative order.
    s : float
        Cnoidal parameter.

    Returns
    -------
    tuple[dict[int, float], float]
        ``(g, const)`` with ``g`` keyed by derivative order.
    """
    g: dict[int, float] = {}
    const = 0.0
    for i, fi in f.items():
        for j, fj in f.items():
            if fi == 0.0 or fj == 0.0:
                continue
            table = coeff_table(i, j, s)
            for n, bn in enumerate(table.b):
                if bn != 0.0:
                    g[n] = g.get(n, 0.0) + fi * fj * bn
            const += fi * fj * table.c
    return g, const


def _ode_rhs(w: TravellingWave) -> tuple[dict[int, float], float]:
    """Coefficients of ``2 beta F'''' - 2 alpha F'' + 2 c F + d`` for the unscaled profile."""

    rhs: dict[int, float] = {}
    for order, coeff in ((0, w.f1), (2, w.f2)):
        if coeff == 0.0:
            continue
        rhs[order + 4] = rhs.get(order + 4, 0.0) + 2.0 * w.beta * coeff
        rhs[order + 2] = rhs.get(order + 2, 0.0) - 2.0 * w.alpha * coeff
        rhs[order] = rhs.get(order, 0.0) + 2.0 * w.c * coeff
    return rhs, w.d


def ode_coefficient_residuals(w: TravellingWave) -> dict[str, float]:
    """Relative residuals of the coefficient comparison behind the wave.

    Each entry compares the coefficient of ``u^(n)`` (or the constant) in ``F^2`` with the one
    in ``2 beta F'''' - 2 alpha F'' + 2 c F + d``.

    Raises
    ------
    DomainError
        If the wave carries a shift or scale (the comparison is done on the base profile).
    """
    if w.shift_a != 0.0 or w.scale_lambda != 1.0:
        raise DomainError("coefficient comparison applies to untransformed waves only")
    g, const = square_expansion({0: w.f1, 2: w.f2}, w.s)
    rhs, d = _ode_rhs(w)
    residuals: dict[str, float] = {}
    for n in sorted(set(g) | set(rhs)):
        left, right = g.get(n, 0.0), rhs.get(n, 0.0)
        residuals[f"u^({n})"] = abs(left - right) / max(abs(left), abs(right), 1e-300)
    residuals["const"] = abs(const - d) / max(abs(const), abs(d), 1e-300)
    return residuals


def kawahara_system_residuals(w: TravellingWave) -> tuple[float, ...]:
    """The five Kawahara coefficient-comparison residuals (orders 6, 4, 2, 0 and the constant)."""

    if w.equation is not Equation.KAWAHARA:
        raise DomainError("kawahara_system_residuals expects a Kawahara wave")
    residuals = ode_coefficient_residuals(w)
    return tuple(residuals[key] for key in ("u^(6)", "u^(4)", "u^(2)", "u^(0)", "const"))


def pde_residual(w: TravellingWave, grid_size: int = 128) -> float:
    """Max-norm of ``-c F' + F F' + alpha F''' - beta F^(5)`` on a uniform grid.

    Raises
    ------
    DomainError
        If ``grid_size < 32``.
    """
    if grid_size < 32:
        raise DomainError(f"grid_size must be at least 32, got {grid_size}")
    x = 2.0 * math.pi * np.arange(grid_size) / (grid_size * w.scale_lambda)
    F = w.profile(x, 0)
    F1 = w.profile(x, 1)
    residual = -w.c * F1 + F * F1 + w.alpha * w.profile(x, 3)
    if w.beta != 0.0:
        residual -= w.beta * w.profile(x, 5)
    return float(np.max(np.abs(residual)))


def integrated_residual(w: TravellingWave, grid_size: int = 64) -> float:
    """Max-norm of ``F^2 - (2 beta F'''' - 2 alpha F'' + 2 c F + d)`` on a uniform grid."""

    x = 2.0 * math.pi * np.arange(grid_size) / (grid_size * w.scale_lambda)
    F = w.profile(x, 0)
    rhs = -2.0 * w.alpha * w.profile(x, 2) + 2.0 * w.c * F + w.d
    if w.beta != 0.0:
        rhs += 2.0 * w.beta * w.profile(x, 4)
    return float(np.max(np.abs(F * F - rhs)))


def _check_construction(w: TravellingWave, *, grid_size: int = 64) -> TravellingWave:
    x = 2.0 * math.pi * np.arange(grid_size) / (grid_size * w.scale_lambda)
    peak = float(np.max(np.abs(w.profile(x))))
    residual = integrated_residual(w, grid_size)
    limit = CONSTRUCTION_TOL * max(1.0, peak**2)
    if residual > limit:
        raise ConstructionError(f"integrated residual {residual:.3e} exceeds {limit:.3e} for {w.equation.cli_name}")
    logger.debug("%s construction residual %.3e", w.equation.cli_name, residual)
    return replace(w, diagnostics=w.diagnostics + (f"integrated residual {residual:.3e}",))


def _check_s(s: float) -> None:
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be a positive finite real, got {s!r}")


def solve_kdv(alpha: float, s: float) -> TravellingWave:
    """Cnoidal wave of ``v_t + v v_z + alpha v_zzz = 0``.

    ``F = 6 alpha u_s`` with speed ``c = -6 alpha (e_2 - s/pi)`` and integration constant
    ``d = 36 alpha^2 (F_0 + 2 (s/pi)(e_2 - s/pi))``.

    Parameters
    ----------
    alpha : float
        Dispersion coefficient, non-zero.
    s : float
        Cnoidal parameter.

    Returns
    -------
    TravellingWave
        The solved wave.

    Raises
    ------
    DegenerateEquationError
        If ``alpha == 0``.
    ConstructionError
        If the solved profile fails the residual cross-check.

    Examples
    --------
    >>> solve_kdv(1.0, 1.0).f1
    6.0
    """
    if alpha == 0:
        raise DegenerateEquationError("KdV with alpha = 0 is linear and has no cnoidal solution")
    _check_s(s)
    mean = s / math.pi
    e2 = e_ell(s, 2).value
    F0 = F_sum(s, 0).value
    wave = TravellingWave(
        s=float(s),
        f1=6.0 * alpha,
        f2=0.0,
        c=-6.0 * alpha * (e2 - mean),
        d=36.0 * alpha**2 * (F0 + 2.0 * mean * (e2 - mean)),
        equation=Equation.KDV,
        alpha=float(alpha),
    )
    return _check_construction(wave)


def kdv_speed_poisson(alpha: float, s: float) -> float:
    """KdV speed in the form ``alpha s^2 (1 - 6 sum_{n>=1} 1/sinh^2(n pi s))``."""

    total, _, _ = _sum_series(lambda n: _inv_sinh2(n * math.pi * s))
    return alpha * s**2 * (1.0 - 6.0 * total)


def apply_freedoms(w: TravellingWave, a: float, lam: float) -> TravellingWave:
    """Shift and rescale a KdV wave: ``F -> a + lam^2 F(lam x)``.

    The new wave travels with speed ``a + lam^2 c`` and has integration constant
    ``lam^4 d - a^2 - 2 a lam^2 c``. Transformations compose.

    Raises
    ------
    DomainError
        If ``lam == 0``.
    UnsupportedTransformError
        For Kawahara waves (rescale alpha and beta instead).
    """
    if w.equation is Equation.KAWAHARA:
        raise UnsupportedTransformError(
            "Kawahara waves have no shift/scale freedom; substitute alpha -> alpha/lam^2, beta -> beta/lam^4"
        )
    if lam == 0:
        raise DomainError("scale lambda must be non-zero")
    return replace(
        w,
        shift_a=a + lam**2 * w.shift_a,
        scale_lambda=lam * w.scale_lambda,
        c=a + lam**2 * w.c,
        d=lam**4 * w.d - a**2 - 2.0 * a * lam**2 * w.c,
    )


def kawahara_g(alpha: float, beta: float, s: float) -> float:
    """``g(s) = 31 alpha^3 + 212940 alpha beta^2 e_4(s) + 2768220 beta^3 e_6(s)``."""

    _check_s(s)
    return KawaharaConstraint(alpha, beta)(s)


def in_gamma_region(alpha: float, beta: float) -> bool:
    """True iff ``beta != 0`` and ``alpha / beta > -13``."""

    return beta != 0 and alpha / beta > GAMMA_RATIO


def kawahara_roots(
    alpha: float,
    beta: float,
    *,
    scan: tuple[float, float, int] = ROOT_SCAN,
    xtol: float = ROOT_XTOL,
) -> list[float]:
    """All roots of g bracketed on a logarithmic scan of s, polished by Brent's method.

    Raises
    ------
    BracketError
        If no sign change is found in the scan range.
    """
    lo, hi, points = scan
    constraint = KawaharaConstraint(alpha, beta)
    grid = np.geomspace(lo, hi, points)
    values = np.array([constraint(float(si)) for si in grid])
    roots: list[float] = []
    for i in range(points - 1):
        g_left, g_right = values[i], values[i + 1]
        if g_left == 0.0:
            roots.append(float(grid[i]))
        elif g_left * g_right < 0.0:
            roots.append(float(brentq(constraint, grid[i], grid[i + 1], xtol=xtol)))
    if values[-1] == 0.0:
        roots.append(float(grid[-1]))
    if not roots:
        raise BracketError(
            f"no sign change of g(s, {alpha}, {beta}) for s in [{lo}, {hi}]",
            s_range=(lo, hi),
            g_range=(float(values.min()), float(values.max())),
        )
    logger.debug("g(s, %g, %g) roots: %s", alpha, beta, roots)
    return roots


def solve_kawahara(
    alpha: float,
    beta: float,
    bracket_hint: tuple[float, float] | None = None,
    *,
    scan_points: int = ROOT_SCAN[2],
) -> TravellingWave:
    """Periodic travelling wave of the Kawahara equation.

    ``F = f1 u_s + f2 u_s''`` with ``f2 = -140 beta`` and ``f1 = 140 alpha / 13``; s is the smallest
    root of :func:`kawahara_g` and the speed is
    ``c = 31 alpha^2 / (507 beta) - (140/13) alpha (e_2 - s/pi) - 140 beta e_4``.

    Parameters
    ----------
    alpha : float
        Third-order dispersion coefficient.
    beta : float
        Fifth-order dispersion coefficient, non-zero.
    bracket_hint : tuple[float, float], optional
        Restrict the root scan to this interval.
    scan_points : int, optional
        Number of scan points.

    Returns
    -------
    TravellingWave
        The solved wave; ``diagnostics`` lists every bracketed root.

    Raises
    ------
    NoSolutionError
        If ``(alpha, beta)`` lies outside the region ``alpha/beta > -13``.
    BracketError
        If g has no sign change in the scan range.
    ConstructionError
        If the solved profile fails the residual cross-check.
    """
    if not in_gamma_region(alpha, beta):
        raise NoSolutionError(f"(alpha, beta) = ({alpha}, {beta}) is outside Γ (beta != 0 and alpha/beta > -13)")
    lo, hi = bracket_hint if bracket_hint is not None else ROOT_SCAN[:2]
    roots = kawahara_roots(alpha, beta, scan=(lo, hi, scan_points))
    s0 = min(roots)
    diagnostics = [f"{len(roots)} root(s) of g bracketed: " + ", ".join(f"{r:.12g}" for r in roots)]
    if len(roots) > 1:
        logger.warning("g(s, %g, %g) has %d roots; using the smallest s0=%.12g", alpha, beta, len(roots), s0)
    g0 = kawahara_g(alpha, beta, s0)
    diagnostics.append(f"g(s0) = {g0:.3e}")

    mean = s0 / math.pi
    e2 = e_ell(s0, 2).value
    e4 = e_ell(s0, 4).value
    e6 = e_ell(s0, 6).value
    F0 = F_sum(s0, 0).value
    F2 = F_sum(s0, 2).value
    F4 = F_sum(s0, 4).value
    f1 = 140.0 * alpha / 13.0
    f2 = -140.0 * beta
    c = 31.0 * alpha**2 / (507.0 * beta) - 140.0 / 13.0 * alpha * (e2 - mean) - 140.0 * beta * e4
    d = (
        2.0 * f1**2 * mean * (e2 - mean)
        - 8.0 * f1 * f2 * mean * e4
        + 6.0 * f2**2 * mean * e6
        + f1**2 * F0
        - 2.0 * f1 * f2 * F2
        + f2**2 * F4
    )
    wave = TravellingWave(
        s=s0,
        f1=f1,
        f2=f2,
        c=c,
        d=d,
        equation=Equation.KAWAHARA,
        alpha=float(alpha),
        beta=float(beta),
        diagnostics=tuple(diagnostics),
    )
    return _check_construction(wave)


__all__ = [
    "apply_freedoms",
    "in_gamma_region",
    "integrated_residual",
    "kawahara_g",
    "kawahara_roots",
    "kawahara_system_residuals",
    "kdv_speed_poisson",
    "ode_coefficient_residuals",
    "pde_residual",
    "solve_kawahara",
    "solve_kdv",
    "square_expansion",
]
