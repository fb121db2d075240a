"""Result types for the auxiliary series and the coefficient families."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .param import SeriesRep


@dataclass(frozen=True)
class SeriesValue:
    """A converged infinite-series evaluation.

    Attributes
    ----------
    value : float
        Value of the sum.
    rep : SeriesRep
        Representation actually used (never ``AUTO``).
    terms_used : int
        Number of series terms consumed.
    tail_bound : float
        Estimated magnitude of the neglected tail.
    """

    value: float
    rep: SeriesRep
    terms_used: int
    tail_bound: float

    def __float__(self) -> float:
        return self.value


class SingularConvention(Enum):
    """How the brute-force convolution sum treats the points where a sinh factor vanishes."""

    LIMIT = "limit"
    """Use the de l'Hospital value ``s / pi`` (what the closed-form coefficients assume)."""

    SKIP = "skip"
    """Drop the two singular lattice points."""


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients of ``u^(alpha) u^(beta) = sum_n b(n) u^(n) + c``.

    Attributes
    ----------
    alpha, beta : int
        Derivative orders of the two factors.
    s : float
        Cnoidal parameter.
    b : tuple[float, ...]
        ``b(0..2+alpha+beta)``.
    c : float
        Constant term.
    a : tuple[float, ...]
        Convolution coefficients ``a(0..2+alpha+beta)`` from which ``b`` is derived.
    leading : Fraction
        Exact value of ``b(2+alpha+beta)``.
    e_values : dict[int, float]
        The e_l values used, keyed by l.
    F_value : float
        ``F_{alpha+beta}`` (0 for odd alpha+beta).
    """

    alpha: int
    beta: int
    s: float
    b: tuple[float, ...]
    c: float
    a: tuple[float, ...]
    leading: Fraction
    e_values: dict[int, float] = field(default_factory=dict, compare=False)
    F_value: float = 0.0

    @property
    def order(self) -> int:
        """Highest derivative order ``2 + alpha + beta`` appearing on the right-hand side."""

        return 2 + self.alpha + self.beta


@dataclass(frozen=True)
class IdentityEntry:
    """One non-zero coefficient ``b(n)`` of a bundled low-order identity.

    ``tag`` is the symbolic form (``-1/3``, ``-4e4``, ``2(s/pi-e2)``), ``expected`` its value at s and
    ``computed`` the value from the general coefficient formulas.
    """

    n: int
    tag: str
    expected: float
    computed: float
    exact: Fraction | None = None


@dataclass(frozen=True)
class IdentityRow:
    """A bundled identity evaluated at s next to :class:`CoeffTable`."""

    alpha: int
    beta: int
    s: float
    entries: tuple[IdentityEntry, ...]
    c_expected: float
    c_computed: float
    leading_exact: bool
    zero_slot_max: float = 0.0

    @property
    def max_deviation(self) -> float:
        """Largest relative gap over the listed entries, the unlisted (zero) slots and c."""

        gaps = [abs(e.computed - e.expected) / max(abs(e.expected), 1.0) for e in self.entries]
        gaps.append(abs(self.c_computed - self.c_expected) / max(abs(self.c_expected), 1.0))
        return max(*gaps, self.zero_slot_max)


__all__ = ["CoeffTable", "IdentityEntry", "IdentityRow", "SeriesValue", "SingularConvention"]
