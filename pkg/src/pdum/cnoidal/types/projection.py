"""Least-squares projection result types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike

if TYPE_CHECKING:
    from numpy.typing import NDArray


class ProjectionSolver(Enum):
    """Linear solver used for the least-squares projection."""

    AUTO = "auto"
    """Normal equations when well conditioned, SVD least squares otherwise."""

    NORMAL = "normal"
    """Cholesky factorisation of the normal equations."""

    TIKHONOV = "tikhonov"
    """Normal equations with a small diagonal shift."""

    SVD = "svd"
    """Direct SVD least squares on the sampled basis."""


@dataclass(frozen=True)
class ProjectionResult:
    """Expansion of a periodic target in ``{1, u_s, u_s', ..., u_s^(N)}``.

    Attributes
    ----------
    s : float
        Cnoidal parameter.
    N : int
        Highest derivative order in the basis.
    coeffs : tuple[float, ...]
        ``N + 2`` coefficients, constant term first.
    l2_residual : float
        Root-mean-square residual on the sample grid.
    gram_condition : float
        Condition number of the column-normalised normal equations.
    solver : ProjectionSolver
        Solver actually used (never ``AUTO``).
    warnings : tuple[str, ...]
        Non-fatal notes such as an unmet basis threshold.
    """

    s: float
    N: int
    coeffs: tuple[float, ...]
    l2_residual: float
    gram_condition: float
    solver: ProjectionSolver
    warnings: tuple[str, ...] = ()

    def evaluate(self, x: ArrayLike) -> NDArray[np.float64]:
        """Evaluate the fitted combination on ``x``."""

        from pdum.cnoidal.projection import design_matrix

        return design_matrix(self.s, self.N, np.asarray(x, dtype=np.float64)) @ np.asarray(self.coeffs)


__all__ = ["ProjectionResult", "ProjectionSolver"]
