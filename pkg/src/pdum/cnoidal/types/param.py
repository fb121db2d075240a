"""Parameter types: the cnoidal parameter s, its elliptic modulus and evaluation policies."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike

from .exceptions import DomainError

if TYPE_CHECKING:
    from numpy.typing import NDArray


class RepPolicy(Enum):
    """Representation used to evaluate u_s and its derivatives."""

    AUTO = ("auto", "Fourier for s <= 1, soliton train for s > 1")
    FOURIER = ("fourier", "Fourier cosine series")
    SOLITON_TRAIN = ("soliton", "periodic train of sech^2 solitons")
    ELLIPTIC = ("elliptic", "affine image of cn^2")

    def __init__(self, cli_name: str, description: str) -> None:
        self._cli_name = cli_name
        self._description = description

    @property
    def cli_name(self) -> str:
        """Name used on the command line (e.g. ``soliton``)."""

        return self._cli_name

    @property
    def description(self) -> str:
        """Human-readable description of the representation."""

        return self._description

    @classmethod
    def from_cli_name(cls, cli_name: str) -> "RepPolicy":
        """Return the enum entry matching ``cli_name``."""

        normalized = cli_name.lower()
        for policy in cls:
            if policy.cli_name == normalized:
                return policy
        raise ValueError(f"Unknown representation: {cli_name!r}")


class SeriesRep(Enum):
    """Representation used to sum the auxiliary series e_l and F_l."""

    AUTO = ("auto", "small-s form for s <= 1, large-s form above")
    SMALL_S = ("small", "direct lattice sum, fast for small s")
    LARGE_S = ("large", "Poisson-summed form, fast for large s")

    def __init__(self, cli_name: str, description: str) -> None:
        self._cli_name = cli_name
        self._description = description

    @property
    def cli_name(self) -> str:
        """Name used on the command line (e.g. ``large``)."""

        return self._cli_name

    @property
    def description(self) -> str:
        """Human-readable description of the representation."""

        return self._description

    @classmethod
    def from_cli_name(cls, cli_name: str) -> "SeriesRep":
        """Return the enum entry matching ``cli_name``."""

        normalized = cli_name.lower()
        for rep in cls:
            if rep.cli_name == normalized:
                return rep
        raise ValueError(f"Unknown series representation: {cli_name!r}")


class BernoulliKind(Enum):
    """First or second Bernoulli numbers (they differ only at index 1)."""

    FIRST = "first"
    SECOND = "second"


class EllipticConvention(Enum):
    """Integrand convention for the complete elliptic integrals.

    ``SQUARED_SINE`` is the standard ``1/sqrt(1 - m sin^2 t)`` integrand evaluated by the
    arithmetic-geometric mean. ``LITERAL_SINE`` integrates ``1/sqrt(1 - m sin t)`` by adaptive
    quadrature; it only exists so the cross-representation checks can show that it does not
    reproduce the elliptic form of u_s.
    """

    SQUARED_SINE = "squared_sine"
    LITERAL_SINE = "literal_sine"


ELLIPTIC_CONVENTION = EllipticConvention.SQUARED_SINE


@dataclass(frozen=True)
class EllipticModulus:
    """Elliptic parameter m tied to s by ``s = K(m) / K(1 - m)``.

    Attributes
    ----------
    m : float
        Parameter in (0, 1). May round to 0.0 or 1.0 for extreme s; ``mc`` stays accurate.
    mc : float
        Complementary parameter ``1 - m`` computed without cancellation.
    K : float
        ``K(m)``.
    Kc : float
        ``K(1 - m)``.
    E : float
        ``E(m)``.
    warnings : tuple[str, ...]
        Precision warnings (extreme s).
    """

    m: float
    mc: float
    K: float
    Kc: float
    E: float
    warnings: tuple[str, ...] = ()

    @property
    def s(self) -> float:
        """The cnoidal parameter reproduced from the modulus."""

        return self.K / self.Kc


@dataclass(frozen=True)
class CnoidalParam:
    """The cnoidal parameter s > 0 with its derived quantities.

    Attributes
    ----------
    s : float
        Shape parameter of u_s.
    rep_policy : RepPolicy, default RepPolicy.AUTO
        Representation used by :func:`pdum.cnoidal.basis.eval_u`.

    Examples
    --------
    >>> param = CnoidalParam(1.0)
    >>> round(param.modulus.m, 12)
    0.5
    """

    s: float
    rep_policy: RepPolicy = RepPolicy.AUTO
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)
    _modulus: EllipticModulus | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.s) and self.s > 0):
            raise DomainError(f"s must be a positive finite real, got {self.s!r}")
        object.__setattr__(self, "s", float(self.s))

    @property
    def lambda_(self) -> float:
        """Decay rate ``pi / s`` of the Fourier coefficients."""

        return math.pi / self.s

    @property
    def mean(self) -> float:
        """Mean value ``s / pi`` of u_s over one period."""

        return self.s / math.pi

    @property
    def modulus(self) -> EllipticModulus:
        """Elliptic modulus, computed on first access."""

        if self._modulus is None:
            with self._lock:
                if self._modulus is None:
                    from pdum.cnoidal.special_fns import modulus_from_s

                    object.__setattr__(self, "_modulus", modulus_from_s(self.s))
        return self._modulus  # type: ignore[return-value]

    def with_policy(self, rep_policy: RepPolicy) -> CnoidalParam:
        """Return a copy using ``rep_policy``."""

        return CnoidalParam(self.s, rep_policy)


@dataclass(frozen=True)
class FourierCoeffs:
    """Fourier coefficients ``U_n(k) = k^(1+n) / sinh(k pi / s)`` of the n-th derivative.

    The k = 0 value is ``s / pi`` for n = 0 and 0 otherwise. Coefficients satisfy
    ``U_n(-k) = (-1)^n U_n(k)`` and
    ``u_s^(n)(x) = delta_{n0} s/pi + 2 sum_{k>=1} U_n(k) cos(k x + n pi / 2)``.
    """

    param: CnoidalParam
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"derivative order must be non-negative, got {self.n}")

    def __call__(self, k: int) -> float:
        return float(self.values(np.asarray([k]))[0])

    def values(self, k: ArrayLike) -> NDArray[np.float64]:
        """Vectorised coefficients for integer wavenumbers ``k``."""

        k = np.asarray(k, dtype=np.float64)
        ak = np.abs(k)
        lam = self.param.lambda_
        out = np.zeros_like(k)
        nz = ak > 0
        with np.errstate(over="ignore", under="ignore"):
            # 1/sinh(lam |k|) written with decaying exponentials
            inv_sinh = 2.0 * np.exp(-lam * ak[nz]) / -np.expm1(-2.0 * lam * ak[nz])
            out[nz] = ak[nz] ** (1 + self.n) * inv_sinh * np.sign(k[nz]) ** self.n
        if self.n == 0:
            out[~nz] = self.param.mean
        return out

    def tail_bound(self, k: ArrayLike) -> NDArray[np.float64]:
        """Upper bound ``|k|^(1+n) 2 e^(-|k| pi/s) / (1 - e^(-2 pi/s))`` on ``|U_n(k)|``."""

        ak = np.abs(np.asarray(k, dtype=np.float64))
        lam = self.param.lambda_
        with np.errstate(under="ignore"):
            return ak ** (1 + self.n) * 2.0 * np.exp(-lam * ak) / -math.expm1(-2.0 * lam)


__all__ = [
    "BernoulliKind",
    "CnoidalParam",
    "ELLIPTIC_CONVENTION",
    "EllipticConvention",
    "EllipticModulus",
    "FourierCoeffs",
    "RepPolicy",
    "SeriesRep",
]
