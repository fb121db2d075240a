"""Auxiliary sums e_l and F_l, the coefficient families a, b, c and identity verification.

For non-negative integers alpha and beta the product of two derivatives of u_s is again a finite
combination of derivatives::

    u^(alpha) u^(beta) = sum_{n=0}^{2+alpha+beta} b(n) u^(n) + c

The coefficients are built from the series

* ``e_l = (1 + (-1)^l) (B_l / l + 2 sum_{k>=1} k^(l-1) / (1 - e^(2 pi k / s)))`` and
* ``F_l = sum_{k in Z} k^(2+l) / sinh^2(k pi / s)``,

each available as a direct lattice sum (fast for small s) and in a Poisson-summed form (fast for
large s).
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np
import yaml

from pdum.cnoidal._helpers import _coth, _inv_sinh2, _kappa_derivative_at, _sum_series, _w_derivative_at
from pdum.cnoidal.basis import eval_grid, fourier_series
from pdum.cnoidal.special_fns import bernoulli
from pdum.cnoidal.types.constants import (
    COEFF_CAP,
    DEFAULT_TOL,
    DERIVATIVE_CAP,
    LARGE_S_E_MAX_ELL,
    LARGE_S_F_MAX_ELL,
    LARGE_S_F_PRINTED_MAX_ELL,
    REP_SWITCH_S,
)
from pdum.cnoidal.types.exceptions import CapabilityError, DomainError
from pdum.cnoidal.types.param import CnoidalParam, FourierCoeffs, RepPolicy, SeriesRep
from pdum.cnoidal.types.series import CoeffTable, IdentityEntry, IdentityRow, SeriesValue, SingularConvention

logger = logging.getLogger(__name__)


def _check_s(s: float) -> None:
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be a positive finite real, got {s!r}")


# ---------------------------------------------------------------------------------------------
# e_l


def _e_small(s: float, ell: int, tol: float) -> SeriesValue:
    def term(k: int) -> float:
        a = 2.0 * math.pi * k / s
        # k^(l-1) / (1 - e^a)
        return k ** (ell - 1) * math.exp(-a) / math.expm1(-a)

    total, used, tail = _sum_series(term, tol=tol)
    value = 2.0 * float(bernoulli(ell)) / ell + 4.0 * total
    return SeriesValue(value, SeriesRep.SMALL_S, used, 4.0 * tail)


def _e_large_printed(s: float, ell: int, tol: float) -> SeriesValue:
    ps = math.pi * s
    if ell == 2:

        def term(n: int) -> float:
            return _inv_sinh2(n * ps)

        total, used, tail = _sum_series(term, tol=tol)
        return SeriesValue(s / math.pi + s**2 * (-1.0 / 6.0 + total), SeriesRep.LARGE_S, used, s**2 * tail)
    if ell == 4:

        def term(n: int) -> float:
            w = _inv_sinh2(n * ps)
            return -w - 1.5 * w * w

        total, used, tail = _sum_series(term, tol=tol)
        return SeriesValue(s**4 * (-1.0 / 60.0 + total), SeriesRep.LARGE_S, used, s**4 * tail)

    def term(n: int) -> float:
        w = _inv_sinh2(n * ps)
        return w + 7.5 * w * w + 7.5 * w**3

    total, used, tail = _sum_series(term, tol=tol)
    return SeriesValue(s**6 * (-1.0 / 126.0 + total), SeriesRep.LARGE_S, used, s**6 * tail)


def _e_large_general(s: float, ell: int, tol: float) -> SeriesValue:
    """Poisson-summed e_{2n+2} for any even order through derivatives of 1/sinh^2."""

    n = (ell - 2) // 2
    ps = math.pi * s

    def term(k: int) -> float:
        return _w_derivative_at(2 * n, k * ps)

    total, used, tail = _sum_series(term, tol=tol)
    scale = (0.5 * s) ** (2 * n)
    value = (-1) ** (n + 1) * s**2 * (s ** (2 * n) * float(bernoulli(ell)) / (n + 1) - scale * total)
    if n == 0:
        value += s / math.pi
    return SeriesValue(value, SeriesRep.LARGE_S, used, s**2 * scale * tail)


@lru_cache(maxsize=4096)
def _e_cached(s: float, ell: int, rep: SeriesRep, tol: float) -> SeriesValue:
    if rep is SeriesRep.SMALL_S:
        return _e_small(s, ell, tol)
    if ell <= 6:
        return _e_large_printed(s, ell, tol)
    return _e_large_general(s, ell, tol)


def e_ell(s: float, ell: int, rep: SeriesRep = SeriesRep.AUTO, *, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Evaluate the auxiliary sum ``e_l(s)``.

    Parameters
    ----------
    s : float
        Cnoidal parameter, ``s > 0``.
    ell : int
        Order, ``ell >= 2``. Odd orders give exactly 0.
    rep : SeriesRep, default SeriesRep.AUTO
        ``SMALL_S`` sums the defining series; ``LARGE_S`` uses the Poisson-summed form
        (even ``ell <= 8``). ``AUTO`` picks ``SMALL_S`` for ``s <= 1``.
    tol : float, optional
        Series termination tolerance.

    Returns
    -------
    SeriesValue
        Value with the representation used, term count and tail estimate.

    Raises
    ------
    DomainError
        If ``s <= 0`` or ``ell < 2``.
    CapabilityError
        If ``LARGE_S`` is requested above order 8.

    Examples
    --------
    >>> e_ell(1.0, 3).value
    0.0
    """
    _check_s(s)
    if ell < 2:
        raise DomainError(f"e_l is defined for l >= 2, got {ell}")
    if rep is SeriesRep.AUTO:
        rep = SeriesRep.SMALL_S if s <= REP_SWITCH_S or ell > LARGE_S_E_MAX_ELL else SeriesRep.LARGE_S
    if ell % 2:
        return SeriesValue(0.0, rep, 0, 0.0)
    if rep is SeriesRep.LARGE_S and ell > LARGE_S_E_MAX_ELL:
        raise CapabilityError(f"large-s form of e_l is implemented up to l={LARGE_S_E_MAX_ELL}, got {ell}")
    return _e_cached(float(s), ell, rep, tol)


# ---------------------------------------------------------------------------------------------
# F_l


def _f_small(s: float, ell: int, tol: float) -> SeriesValue:
    lam = math.pi / s

    def term(k: int) -> float:
        return k ** (ell + 2) * _inv_sinh2(k * lam)

    total, used, tail = _sum_series(term, tol=tol)
    value = 2.0 * total
    if ell == 0:
        value += (s / math.pi) ** 2
    return SeriesValue(value, SeriesRep.SMALL_S, used, 2.0 * tail)


def _f_large_printed(s: float, ell: int, tol: float) -> SeriesValue:
    ps = math.pi * s
    e = e_ell(s, ell + 2, SeriesRep.LARGE_S, tol=tol).value

    # x cosh^j(x)/sinh^{j+2}(x) combinations rewritten as x coth(x) times a polynomial in w
    if ell == 0:
        coeffs = (2.0,)
        sign, power, lead = 1.0, 3, -2.0
    elif ell == 2:
        coeffs = (2.0, 6.0)
        sign, power, lead = -1.0, 5, -4.0
    else:
        coeffs = (2.0, 30.0, 45.0)
        sign, power, lead = 1.0, 7, -6.0

    def term(n: int) -> float:
        x = n * ps
        w = _inv_sinh2(x)
        poly = sum(c * w ** (i + 1) for i, c in enumerate(coeffs))
        return x * _coth(x) * poly

    total, used, tail = _sum_series(term, tol=tol)
    value = lead * s / math.pi * e + sign * s**power / math.pi * total
    if ell == 0:
        value += 2.0 * s**2 / math.pi**2
    return SeriesValue(value, SeriesRep.LARGE_S, used, s**power / math.pi * tail)


def _f_large_general(s: float, ell: int, tol: float) -> SeriesValue:
    """``F_{2n} = (-1)^n (2 s^3/pi) (s^{2n} B_{2n+2} + (s/2)^{2n} sum_k kappa^(2n)(k pi s))``."""

    n = ell // 2
    ps = math.pi * s

    def term(k: int) -> float:
        return _kappa_derivative_at(2 * n, k * ps)

    total, used, tail = _sum_series(term, tol=tol)
    scale = (0.5 * s) ** (2 * n)
    pref = (-1) ** n * 2.0 * s**3 / math.pi
    value = pref * (s ** (2 * n) * float(bernoulli(2 * n + 2)) + scale * total)
    return SeriesValue(value, SeriesRep.LARGE_S, used, abs(pref) * scale * tail)


@lru_cache(maxsize=4096)
def _f_cached(s: float, ell: int, rep: SeriesRep, tol: float) -> SeriesValue:
    if rep is SeriesRep.SMALL_S:
        return _f_small(s, ell, tol)
    if ell <= LARGE_S_F_PRINTED_MAX_ELL:
        return _f_large_printed(s, ell, tol)
    return _f_large_general(s, ell, tol)


def F_sum(s: float, ell: int, rep: SeriesRep = SeriesRep.AUTO, *, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Evaluate ``F_l(s) = sum_{k in Z} k^(2+l) / sinh^2(k pi / s)``.

    The k = 0 term is ``(s / pi)^2`` for ``l = 0`` and 0 otherwise. Odd orders give exactly 0.
    ``AUTO`` uses the large-s form for ``s > 1`` and ``l <= 4``.

    Raises
    ------
    DomainError
        If ``s <= 0`` or ``ell < 0``.
    CapabilityError
        If ``LARGE_S`` is requested above order 8.
    """
    _check_s(s)
    if ell < 0:
        raise DomainError(f"F_l is defined for l >= 0, got {ell}")
    if rep is SeriesRep.AUTO:
        use_small = s <= REP_SWITCH_S or ell > LARGE_S_F_PRINTED_MAX_ELL
        rep = SeriesRep.SMALL_S if use_small else SeriesRep.LARGE_S
    if ell % 2:
        return SeriesValue(0.0, rep, 0, 0.0)
    if rep is SeriesRep.LARGE_S and ell > LARGE_S_F_MAX_ELL:
        raise CapabilityError(f"large-s form of F_l is implemented up to l={LARGE_S_F_MAX_ELL}, got {ell}")
    return _f_cached(float(s), ell, rep, tol)


# ---------------------------------------------------------------------------------------------
# coefficient families


def leading_coefficient(alpha: int, beta: int) -> Fraction:
    """Exact ``a(2+alpha+beta) = 2 (-1)^alpha (1+alpha)! (1+beta)! / (3+alpha+beta)!``."""

    ratio = Fraction(math.factorial(1 + alpha) * math.factorial(1 + beta), math.factorial(3 + alpha + beta))
    return 2 * (-1) ** alpha * ratio


def _check_orders(alpha: int, beta: int) -> None:
    if alpha < 0 or beta < 0:
        raise DomainError(f"derivative orders must be non-negative, got ({alpha}, {beta})")


def _coeff_a(alpha: int, beta: int, n: int, s: float, e_values: dict[int, float]) -> float:
    total_order = alpha + beta
    if n == total_order + 2:
        return float(leading_coefficient(alpha, beta))
    if n == total_order + 1 or (total_order + n) % 2:
        return 0.0
    binomials = math.comb(1 + alpha, 1 + n) + (-1) ** n * math.comb(1 + beta, 1 + n)
    value = (-1) ** (1 + total_order) * binomials * e_values[2 + total_order - n]
    mean = s / math.pi
    if alpha == n and beta == 0:
        value += (-1) ** alpha * mean
    if beta == n and alpha == 0:
        value += mean
    return value


def _e_values(alpha: int, beta: int, s: float, tol: float) -> dict[int, float]:
    return {ell: e_ell(s, ell, tol=tol).value for ell in range(2, 3 + alpha + beta)}


def coeff_a(alpha: int, beta: int, n: int, s: float, *, tol: float = DEFAULT_TOL) -> float:
    """Convolution coefficient ``a_{alpha,beta}(n)``.

    Parameters
    ----------
    alpha, beta : int
        Non-negative derivative orders.
    n : int
        Index in ``0..2+alpha+beta``.
    s : float
        Cnoidal parameter.
    tol : float, optional
        Tolerance passed to :func:`e_ell`.

    Returns
    -------
    float
        The coefficient, including both Kronecker-delta terms.

    Raises
    ------
    DomainError
        If ``n`` is out of range.

    Examples
    --------
    >>> round(coeff_a(0, 0, 2, 1.0), 15)
    0.333333333333333
    """
    _check_orders(alpha, beta)
    _check_s(s)
    if not 0 <= n <= 2 + alpha + beta:
        raise DomainError(f"n must lie in 0..{2 + alpha + beta}, got {n}")
    return _coeff_a(alpha, beta, n, s, _e_values(alpha, beta, s, tol))


def coeff_table(alpha: int, beta: int, s: float, *, tol: float = DEFAULT_TOL) -> CoeffTable:
    """Coefficients ``b(0..2+alpha+beta)`` and ``c`` of the product identity.

    ``b(n) = (-1)^((alpha-beta+n)/2) a(n)`` and
    ``c = (-1)^((alpha-beta)/2) F_{alpha+beta} - (s/pi) b(0)``; both vanish for the wrong parity.

    Raises
    ------
    CapabilityError
        If ``alpha`` or ``beta`` exceeds the coefficient cap.

    Examples
    --------
    >>> coeff_table(0, 0, 1.0).leading
    Fraction(-1, 3)
    """
    _check_orders(alpha, beta)
    _check_s(s)
    if alpha > COEFF_CAP or beta > COEFF_CAP:
        raise CapabilityError(f"coefficient orders are capped at {COEFF_CAP}, got ({alpha}, {beta})")
    e_values = _e_values(alpha, beta, s, tol)
    a = tuple(_coeff_a(alpha, beta, n, s, e_values) for n in range(3 + alpha + beta))
    b = []
    for n, an in enumerate(a):
        parity = alpha - beta + n
        b.append(0.0 if parity % 2 else (-1) ** (parity // 2) * an)

    total_order = alpha + beta
    F_value = 0.0
    c = 0.0
    if total_order % 2 == 0:
        F_value = F_sum(s, total_order, tol=tol).value
        c = (-1) ** ((alpha - beta) // 2) * F_value - s / math.pi * b[0]
    leading = (-1) ** ((alpha - beta + total_order + 2) // 2) * leading_coefficient(alpha, beta)
    logger.debug("coeff_table(%d, %d, s=%g): b=%s c=%r", alpha, beta, s, b, c)
    return CoeffTable(
        alpha=alpha,
        beta=beta,
        s=float(s),
        b=tuple(b),
        c=c,
        a=a,
        leading=leading,
        e_values=e_values,
        F_value=F_value,
    )


def identity_mean(alpha: int, beta: int, s: float) -> float:
    """Mean of ``u^(alpha) u^(beta)`` over a period from the identity, ``b(0) s/pi + c``."""

    table = coeff_table(alpha, beta, s)
    return table.b[0] * s / math.pi + table.c


# ---------------------------------------------------------------------------------------------
# verification


def _lattice_cutoff(s: float, power: int, j: int) -> int:
    """Half-width beyond which ``|k|^power e^(-pi(|k|+|k+j|)/s)`` is below 1e-18 relative."""

    lam = math.pi / s
    K = abs(j) + 8
    while (2 * K) ** power * math.exp(-lam * (2 * K - abs(j))) > 1e-18:
        K += 8
    return K


def verify_convolution(
    alpha: int,
    beta: int,
    j: int,
    s: float,
    K_max: int | None = None,
    *,
    convention: SingularConvention = SingularConvention.LIMIT,
) -> float:
    """Compare the brute-force convolution sum against its closed form.

    The left-hand side is ``sum_k U_alpha(k) U_beta(k + j)`` over ``|k| <= K_max`` with
    ``U_n(k) = k^(1+n)/sinh(k pi/s)``; the right-hand side is ``sum_n a(n) U_n(j)``.

    Parameters
    ----------
    alpha, beta : int
        Non-negative orders.
    j : int
        Non-zero shift.
    s : float
        Cnoidal parameter.
    K_max : int, optional
        Half-width of the brute-force sum. Chosen from the summand decay when omitted.
    convention : SingularConvention, default SingularConvention.LIMIT
        Treatment of ``k = 0`` and ``k = -j``.

    Returns
    -------
    float
        ``|LHS - RHS|``.

    Raises
    ------
    DomainError
        If ``j == 0``.
    """
    _check_orders(alpha, beta)
    _check_s(s)
    if j == 0:
        raise DomainError("the convolution formula requires j != 0")
    if K_max is None:
        K_max = _lattice_cutoff(s, 2 + alpha + beta, j)
    param = CnoidalParam(s)
    ks = np.arange(-K_max, K_max + 1)
    left = FourierCoeffs(param, alpha).values(ks) * FourierCoeffs(param, beta).values(ks + j)
    if convention is SingularConvention.SKIP:
        left = left[(ks != 0) & (ks != -j)]
    lhs = math.fsum(left.tolist())

    e_values = _e_values(alpha, beta, s, DEFAULT_TOL)
    rhs = math.fsum(
        _coeff_a(alpha, beta, n, s, e_values) * FourierCoeffs(param, n)(j) for n in range(3 + alpha + beta)
    )
    residual = abs(lhs - rhs)
    logger.debug("convolution(%d, %d, j=%d, s=%g): lhs=%r rhs=%r", alpha, beta, j, s, lhs, rhs)
    return residual


def verify_identity(
    alpha: int,
    beta: int,
    s: float,
    grid_size: int = 64,
    *,
    rep_policy: RepPolicy = RepPolicy.AUTO,
) -> float:
    """Max over a uniform grid of ``|u^(alpha) u^(beta) - sum_n b(n) u^(n) - c|``.

    Raises
    ------
    DomainError
        If ``grid_size < 8``.
    """
    if grid_size < 8:
        raise DomainError(f"grid_size must be at least 8, got {grid_size}")
    table = coeff_table(alpha, beta, s)
    param = CnoidalParam(s, rep_policy)
    x = 2.0 * math.pi * np.arange(grid_size) / grid_size
    lhs = eval_grid(param, x, alpha) * eval_grid(param, x, beta)
    rhs = np.full_like(x, table.c)
    for n, bn in enumerate(table.b):
        if bn == 0.0:
            continue
        # the right-hand side reaches order alpha + beta + 2, past the evaluation cap
        column = eval_grid(param, x, n) if n <= DERIVATIVE_CAP else fourier_series(param, x, n)
        rhs += bn * column
    return float(np.max(np.abs(lhs - rhs)))


def lemma_a1(s: float, n: int, *, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Both sides of the Poisson-summation identity for ``sum_k k^(2n+1) / (1 - e^(2 pi k/s))``.

    Right-hand side::

        (s/(4 pi)) delta_{n0} + B_{2n+2}/(4(n+1)) ((-1)^(n+1) s^(2n+2) - 1)
            + (-1)^n (s^2/4) (s/2)^(2n) sum_{k>=1} w^(2n)(k pi s)

    with ``w(x) = 1/sinh(x)^2``.
    """
    _check_s(s)

    def lhs_term(k: int) -> float:
        a = 2.0 * math.pi * k / s
        return k ** (2 * n + 1) * math.exp(-a) / math.expm1(-a)

    lhs, _, _ = _sum_series(lhs_term, tol=tol)
    ps = math.pi * s
    tail, _, _ = _sum_series(lambda k: _w_derivative_at(2 * n, k * ps), tol=tol)
    b = float(bernoulli(2 * n + 2))
    rhs = b / (4 * (n + 1)) * ((-1) ** (n + 1) * s ** (2 * n + 2) - 1.0)
    rhs += (-1) ** n * 0.25 * s**2 * (0.5 * s) ** (2 * n) * tail
    if n == 0:
        rhs += s / (4.0 * math.pi)
    return lhs, rhs


def lemma_a2(s: float, n: int, *, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Both sides of the Poisson-summation identity for ``sum_{k>=1} k^(2n+2) / sinh^2(k pi/s)``.

    Right-hand side::

        -(s^2/(2 pi^2)) delta_{n0}
            + (-1)^n (s^3/pi) (s^(2n) B_{2n+2} + (s/2)^(2n) sum_{k>=1} kappa^(2n)(k pi s))

    with ``kappa(x) = x cosh(x)/sinh(x)^3 - 1/sinh(x)^2``.
    """
    _check_s(s)
    lam = math.pi / s
    lhs, _, _ = _sum_series(lambda k: k ** (2 * n + 2) * _inv_sinh2(k * lam), tol=tol)
    ps = math.pi * s
    tail, _, _ = _sum_series(lambda k: _kappa_derivative_at(2 * n, k * ps), tol=tol)
    rhs = (-1) ** n * s**3 / math.pi * (s ** (2 * n) * float(bernoulli(2 * n + 2)) + (0.5 * s) ** (2 * n) * tail)
    if n == 0:
        rhs -= s**2 / (2.0 * math.pi**2)
    return lhs, rhs


def ramanujan_sides(order: int, *, max_terms: int = 50) -> tuple[float, float]:
    """Both sides of ``sum k^(4m)/sinh^2(k pi) = -B_{4m}/(2 pi) - (4m/pi) sum k^(4m-1)/(1 - e^(2 pi k))``.

    Parameters
    ----------
    order : int
        The exponent ``4m`` (a positive multiple of 4).
    max_terms : int, default 50
        Number of terms of each series.

    Raises
    ------
    DomainError
        If ``order`` is not a positive multiple of 4.
    """
    if order <= 0 or order % 4:
        raise DomainError(f"order must be a positive multiple of 4, got {order}")
    ks = range(1, max_terms + 1)
    lhs = math.fsum(k**order * _inv_sinh2(k * math.pi) for k in ks)
    series = math.fsum(k ** (order - 1) * math.exp(-2 * math.pi * k) / math.expm1(-2 * math.pi * k) for k in ks)
    rhs = -float(bernoulli(order)) / (2.0 * math.pi) - order / math.pi * series
    return lhs, rhs


# ---------------------------------------------------------------------------------------------
# bundled low-order identities

_IDENTITY_TABLE_CACHE: list[dict] | None = None


def _load_identity_table() -> list[dict]:
    """Read ``data/product_identities.yaml`` once.

    Raises
    ------
    FileNotFoundError
        If the bundled data file is missing.
    """
    global _IDENTITY_TABLE_CACHE
    if _IDENTITY_TABLE_CACHE is not None:
        return _IDENTITY_TABLE_CACHE

    path = Path(__file__).parent / "data" / "product_identities.yaml"
    if not path.exists():
        raise FileNotFoundError(f"identity table not found at {path}")
    with open(path, "r", encoding="utf-8") as f:
        _IDENTITY_TABLE_CACHE = yaml.safe_load(f)["identities"]
    return _IDENTITY_TABLE_CACHE


def _format_factor(factor: int) -> str:
    return {1: "", -1: "-"}.get(factor, str(factor))


def _identity_entry(item: dict, s: float, computed: float) -> IdentityEntry:
    kind = item["kind"]
    if kind == "rational":
        exact = Fraction(item["value"])
        return IdentityEntry(item["n"], str(exact), float(exact), computed, exact)
    factor = item["factor"]
    if kind == "e":
        ell = item["ell"]
        value = factor * e_ell(s, ell).value
        return IdentityEntry(item["n"], f"{_format_factor(factor)}e{ell}", value, computed)
    if kind == "mean_minus_e2":
        value = factor * (s / math.pi - e_ell(s, 2).value)
        tag = "s/pi-e2" if factor == 1 else f"{_format_factor(factor)}(s/pi-e2)"
        return IdentityEntry(item["n"], tag, value, computed)
    raise ValueError(f"Unknown identity entry kind: {kind!r}")


def product_identity_rows(s: float) -> list[IdentityRow]:
    """The nine bundled low-order identities at s, each next to :func:`coeff_table`.

    Rational leading entries are compared exactly; e-dependent entries numerically; ``c`` is
    ``constant_sign * F_{alpha+beta} - b(0) s/pi``.

    Examples
    --------
    >>> len(product_identity_rows(1.0))
    9
    """
    _check_s(s)
    rows = []
    for layout in _load_identity_table():
        alpha, beta = layout["alpha"], layout["beta"]
        table = coeff_table(alpha, beta, s)
        entries = tuple(_identity_entry(entry, s, table.b[entry["n"]]) for entry in layout["entries"])
        listed = {entry.n for entry in entries}
        zero_slot_max = max((abs(v) for n, v in enumerate(table.b) if n not in listed), default=0.0)
        leading = next(entry for entry in entries if entry.n == table.order)
        sign = layout["constant_sign"]
        c_expected = 0.0
        if sign:
            c_expected = sign * F_sum(s, alpha + beta).value - table.b[0] * s / math.pi
        rows.append(
            IdentityRow(
                alpha=alpha,
                beta=beta,
                s=float(s),
                entries=entries,
                c_expected=c_expected,
                c_computed=table.c,
                leading_exact=leading.exact == table.leading,
                zero_slot_max=zero_slot_max,
            )
        )
    return rows


__all__ = [
    "F_sum",
    "coeff_a",
    "coeff_table",
    "e_ell",
    "identity_mean",
    "leading_coefficient",
    "lemma_a1",
    "lemma_a2",
    "product_identity_rows",
    "ramanujan_sides",
    "verify_convolution",
    "verify_identity",
]
