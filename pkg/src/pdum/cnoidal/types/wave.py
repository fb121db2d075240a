"""Travelling-wave solution types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike

if TYPE_CHECKING:
    from numpy.typing import NDArray


class Equation(Enum):
    """Wave equation a :class:`TravellingWave` solves."""

    KDV = ("kdv", "v_t + v v_z + alpha v_zzz = 0")
    KAWAHARA = ("kawahara", "v_t + v v_z + alpha v_zzz - beta v_zzzzz = 0")

    def __init__(self, cli_name: str, pde: str) -> None:
        self._cli_name = cli_name
        self._pde = pde

    @property
    def cli_name(self) -> str:
        """Subcommand name (e.g. ``kdv``)."""

        return self._cli_name

    @property
    def pde(self) -> str:
        """The partial differential equation in text form."""

        return self._pde


@dataclass(frozen=True)
class TravellingWave:
    """A solved periodic travelling-wave profile.

    The profile is ``F(x) = shift_a + scale_lambda^2 (f1 u_s(y) + f2 u_s''(y))`` with
    ``y = scale_lambda x``; it travels with speed ``c`` and satisfies the once-integrated
    travelling-wave ODE with integration constant ``d``.

    Attributes
    ----------
    s : float
        Cnoidal parameter.
    f1 : float
        Coefficient of u_s.
    f2 : float
        Coefficient of u_s'' (0 for KdV).
    c : float
        Wave speed.
    d : float
        Integration constant.
    equation : Equation
        Equation the wave solves.
    alpha, beta : float
        Equation coefficients (``beta`` is 0 for KdV).
    shift_a : float, default 0.0
        Additive constant.
    scale_lambda : float, default 1.0
        Spatial scale.
    diagnostics : tuple[str, ...]
        Notes from the construction (root counts, residual checks).
    """

    s: float
    f1: float
    f2: float
    c: float
    d: float
    equation: Equation
    alpha: float
    beta: float = 0.0
    shift_a: float = 0.0
    scale_lambda: float = 1.0
    diagnostics: tuple[str, ...] = ()

    def profile(self, x: ArrayLike, n: int = 0) -> NDArray[np.float64]:
        """Evaluate the n-th derivative of the profile on ``x``."""

        from pdum.cnoidal.basis import eval_grid
        from pdum.cnoidal.types.param import CnoidalParam, RepPolicy

        param = CnoidalParam(self.s, RepPolicy.FOURIER)
        lam = self.scale_lambda
        y = lam * np.asarray(x, dtype=np.float64)
        values = np.zeros_like(y)
        if self.f1:
            values += self.f1 * eval_grid(param, y, n)
        if self.f2:
            values += self.f2 * eval_grid(param, y, n + 2)
        values *= lam ** (2 + n)
        if n == 0:
            values += self.shift_a
        return values


@dataclass(frozen=True)
class KawaharaConstraint:
    """The scalar constraint g(s) whose root fixes s for the Kawahara wave.

    ``g(s) = 31 alpha^3 + 212940 alpha beta^2 e_4(s) + 2768220 beta^3 e_6(s)``.
    """

    alpha: float
    beta: float

    def __call__(self, s: float) -> float:
        from pdum.cnoidal.coefficients import e_ell

        value = 31.0 * self.alpha**3
        if self.beta != 0.0:
            value += 212940.0 * self.alpha * self.beta**2 * e_ell(s, 4).value
            value += 2768220.0 * self.beta**3 * e_ell(s, 6).value
        return value


__all__ = ["Equation", "KawaharaConstraint", "TravellingWave"]
