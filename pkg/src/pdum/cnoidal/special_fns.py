"""Bernoulli numbers, complete elliptic integrals, Jacobi elliptic functions and the s <-> m map."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from scipy.integrate import quad

from pdum.cnoidal.types.constants import (
    AGM_MAX_ITER,
    AGM_RTOL,
    BERNOULLI_CAP,
    MODULUS_RTOL,
    PRECISION_WARN_S,
)
from pdum.cnoidal.types.exceptions import CapabilityError, DomainError
from pdum.cnoidal.types.param import (
    ELLIPTIC_CONVENTION,
    BernoulliKind,
    EllipticConvention,
    EllipticModulus,
)

logger = logging.getLogger(__name__)

# logit(m) range searched by modulus_from_s; expit(-740) is subnormal but non-zero
_LOGIT_BOUND = 740.0


@lru_cache(maxsize=1)
def _bernoulli_first() -> tuple[Fraction, ...]:
    values = [Fraction(1)]
    for ell in range(1, BERNOULLI_CAP + 1):
        total = sum((comb(ell, k) * values[k] / (ell - k + 1) for k in range(ell)), Fraction(0))
        values.append(-total)
    return tuple(values)


def bernoulli(ell: int, kind: BernoulliKind = BernoulliKind.FIRST) -> Fraction:
    """Return the Bernoulli number ``B_ell`` as an exact rational.

    Uses ``B_0 = 1`` and ``B_ell = -sum_{k<ell} C(ell, k) B_k / (ell - k + 1)``.

    Parameters
    ----------
    ell : int
        Index, ``0 <= ell <= 64``.
    kind : BernoulliKind, default BernoulliKind.FIRST
        ``SECOND`` flips the sign of ``B_1`` and leaves every other value unchanged.

    Returns
    -------
    Fraction
        Exact value.

    Raises
    ------
    DomainError
        If ``ell`` is negative.
    CapabilityError
        If ``ell`` exceeds the cap.

    Examples
    --------
    >>> bernoulli(2)
    Fraction(1, 6)
    >>> bernoulli(1, BernoulliKind.SECOND)
    Fraction(1, 2)
    """
    if ell < 0:
        raise DomainError(f"Bernoulli index must be non-negative, got {ell}")
    if ell > BERNOULLI_CAP:
        raise CapabilityError(f"Bernoulli index {ell} exceeds cap {BERNOULLI_CAP}")
    value = _bernoulli_first()[ell]
    if ell == 1 and kind is BernoulliKind.SECOND:
        return -value
    return value


def bernoulli_table(up_to: int, kind: BernoulliKind = BernoulliKind.FIRST) -> list[Fraction]:
    """Return ``[B_0, ..., B_up_to]``."""

    return [bernoulli(ell, kind) for ell in range(up_to + 1)]


def _agm(a: float, b: float) -> tuple[float, list[float]]:
    """Arithmetic-geometric mean of ``a`` and ``b`` and the half-differences ``c_1, c_2, ...``."""

    cs: list[float] = []
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= AGM_RTOL * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        cs.append(c)
    return a, cs


def _check_parameter(m: float) -> None:
    if not (0.0 < m < 1.0):
        raise DomainError(f"elliptic parameter must lie in (0, 1), got {m!r}")


def _k_from_complement(mc: float) -> float:
    """``K(1 - mc)`` without forming ``1 - mc``."""

    a, _ = _agm(1.0, math.sqrt(mc))
    return math.pi / (2.0 * a)


def _e_from_parts(m: float, mc: float) -> float:
    a, cs = _agm(1.0, math.sqrt(mc))
    total = 0.5 * m
    for n, c in enumerate(cs, start=1):
        total += 2.0 ** (n - 1) * c * c
    return math.pi / (2.0 * a) * (1.0 - total)


def _literal_integral(m: float, power: float) -> float:
    value, _ = quad(lambda t: (1.0 - m * math.sin(t)) ** power, 0.0, math.pi / 2, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


def elliptic_K(m: float, *, convention: EllipticConvention = ELLIPTIC_CONVENTION) -> float:
    """Complete elliptic integral of the first kind.

    Parameters
    ----------
    m : float
        Parameter in (0, 1).
    convention : EllipticConvention, optional
        ``SQUARED_SINE`` (default) evaluates ``int_0^{pi/2} dt / sqrt(1 - m sin^2 t)`` by the
        arithmetic-geometric mean. ``LITERAL_SINE`` integrates ``1 / sqrt(1 - m sin t)`` by
        adaptive quadrature.

    Returns
    -------
    float
        ``K(m)``.

    Raises
    ------
    DomainError
        If ``m`` lies outside (0, 1).
    """
    _check_parameter(m)
    if convention is EllipticConvention.LITERAL_SINE:
        return _literal_integral(m, -0.5)
    return _k_from_complement(1.0 - m)


def elliptic_E(m: float, *, convention: EllipticConvention = ELLIPTIC_CONVENTION) -> float:
    """Complete elliptic integral of the second kind (see :func:`elliptic_K` for conventions)."""

    _check_parameter(m)
    if convention is EllipticConvention.LITERAL_SINE:
        return _literal_integral(m, 0.5)
    return _e_from_parts(m, 1.0 - m)


def legendre_residual(m: float, *, convention: EllipticConvention = ELLIPTIC_CONVENTION) -> float:
    """Return ``K E' + K' E - K K' - pi/2``, which vanishes for the standard integrals."""

    K = elliptic_K(m, convention=convention)
    Kc = elliptic_K(1.0 - m, convention=convention)
    E = elliptic_E(m, convention=convention)
    Ec = elliptic_E(1.0 - m, convention=convention)
    return K * Ec + Kc * E - K * Kc - math.pi / 2


def _sn_cn_dn(z: float, m: float, mc: float) -> tuple[float, float, float]:
    # descending Landen / AGM scheme
    a_list = [1.0]
    c_list = [math.sqrt(m)]
    a, b = 1.0, math.sqrt(mc)
    for _ in range(AGM_MAX_ITER):
        if abs(c_list[-1]) <= AGM_RTOL * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_list.append(a)
        c_list.append(c)
    n_steps = len(a_list) - 1
    if n_steps == 0:
        return math.sin(z), math.cos(z), 1.0
    phi = 2.0**n_steps * a_list[-1] * z
    phis = [phi]
    for n in range(n_steps, 0, -1):
        phi = 0.5 * (phi + math.asin(c_list[n] / a_list[n] * math.sin(phi)))
        phis.append(phi)
    phi0 = phis[-1]
    cn = math.cos(phi0)
    # dn^2 = mc + m cn^2 stays accurate where cos(phi0) / cos(phi1 - phi0) is 0/0
    return math.sin(phi0), cn, math.sqrt(mc + m * cn * cn)


def jacobi_sn_cn_dn(z: float, m: float) -> tuple[float, float, float]:
    """Jacobi elliptic functions ``sn``, ``cn`` and ``dn`` at real ``z``.

    The argument is first reduced modulo the common period ``4K(m)``.

    Parameters
    ----------
    z : float
        Finite real argument.
    m : float
        Parameter in (0, 1).

    Returns
    -------
    tuple[float, float, float]
        ``(sn, cn, dn)``.

    Raises
    ------
    DomainError
        If ``m`` lies outside (0, 1) or ``z`` is not finite.
    """
    _check_parameter(m)
    return _jacobi_reduced(z, m, 1.0 - m)


def _jacobi_reduced(z: float, m: float, mc: float) -> tuple[float, float, float]:
    if not math.isfinite(z):
        raise DomainError(f"argument must be finite, got {z!r}")
    period = 4.0 * _k_from_complement(mc)
    z = z - period * round(z / period)
    return _sn_cn_dn(z, m, mc)


def jacobi_cn(z: float, m: float) -> float:
    """Jacobi elliptic function ``cn(z; m)``.

    Examples
    --------
    >>> jacobi_cn(0.0, 0.3)
    1.0
    """
    return jacobi_sn_cn_dn(z, m)[1]


def _expit_pair(t: float) -> tuple[float, float]:
    """Return ``(1/(1+e^-t), 1/(1+e^t))`` without cancellation."""

    if t >= 0:
        e = math.exp(-t)
        return 1.0 / (1.0 + e), e / (1.0 + e)
    e = math.exp(t)
    return e / (1.0 + e), 1.0 / (1.0 + e)


def _ratio(t: float) -> float:
    m, mc = _expit_pair(t)
    return _k_from_complement(mc) / _k_from_complement(m)


def modulus_from_s(s: float, *, rtol: float = MODULUS_RTOL) -> EllipticModulus:
    """Solve ``K(m) / K(1 - m) = s`` for the elliptic parameter m.

    The ratio is strictly increasing in m; the bisection runs on ``t = log(m / (1 - m))`` so that
    both ``m`` and ``1 - m`` stay accurate when they are tiny.

    Parameters
    ----------
    s : float
        Cnoidal parameter, ``s > 0``.
    rtol : float, optional
        Relative tolerance on the reproduced s.

    Returns
    -------
    EllipticModulus
        Modulus with ``K``, ``K(1-m)`` and ``E``; carries a precision warning for extreme s.

    Raises
    ------
    DomainError
        If ``s`` is not a positive finite real.

    Examples
    --------
    >>> round(modulus_from_s(1.0).m, 12)
    0.5
    """
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be a positive finite real, got {s!r}")

    warnings: list[str] = []
    lo, hi = -_LOGIT_BOUND, _LOGIT_BOUND
    if s == 1.0:
        t = 0.0
    elif s <= _ratio(lo) or s >= _ratio(hi):
        t = lo if s <= _ratio(lo) else hi
        warnings.append(f"s={s:g} lies beyond the representable modulus range; m clamped")
    else:
        t = 0.0
        for _ in range(400):
            t = 0.5 * (lo + hi)
            r = _ratio(t)
            if abs(r - s) <= rtol * s or hi - lo <= 4 * math.ulp(max(1.0, abs(t))):
                break
            if r < s:
                lo = t
            else:
                hi = t

    m, mc = _expit_pair(t)
    if not (PRECISION_WARN_S[0] <= s <= PRECISION_WARN_S[1]):
        warnings.append(f"s={s:g} is extreme; modulus accuracy is reduced")
    for warning in warnings:
        logger.warning(warning)

    K = _k_from_complement(mc)
    Kc = _k_from_complement(m)
    E = _e_from_parts(m, mc)
    logger.debug("modulus_from_s(%g): m=%r, K=%r, K'=%r", s, m, K, Kc)
    return EllipticModulus(m=m, mc=mc, K=K, Kc=Kc, E=E, warnings=tuple(warnings))


def modulus_from_s_literal(s: float) -> EllipticModulus:
    """Modulus under the literal ``sin`` integrand, found by bisection on m with quadrature.

    Only used to show that the literal integrand does not reproduce the elliptic form of u_s.
    """
    convention = EllipticConvention.LITERAL_SINE
    lo, hi = 1e-12, 1.0 - 1e-12
    m = 0.5
    for _ in range(200):
        m = 0.5 * (lo + hi)
        r = elliptic_K(m, convention=convention) / elliptic_K(1.0 - m, convention=convention)
        if abs(r - s) <= MODULUS_RTOL * s or hi - lo <= 1e-15:
            break
        if r < s:
            lo = m
        else:
            hi = m
    return EllipticModulus(
        m=m,
        mc=1.0 - m,
        K=elliptic_K(m, convention=convention),
        Kc=elliptic_K(1.0 - m, convention=convention),
        E=elliptic_E(m, convention=convention),
    )


__all__ = [
    "bernoulli",
    "bernoulli_table",
    "elliptic_E",
    "elliptic_K",
    "jacobi_cn",
    "jacobi_sn_cn_dn",
    "legendre_residual",
    "modulus_from_s",
    "modulus_from_s_literal",
]
