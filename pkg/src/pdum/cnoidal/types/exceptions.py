"""Custom exceptions for pdum.cnoidal."""

from __future__ import annotations


class CnoidalError(Exception):
    """Base class for every error raised by pdum.cnoidal."""

    __slots__ = ()


class DomainError(CnoidalError, ValueError):
    """Raised when an input lies outside the mathematical domain of an operation."""

    __slots__ = ()


class CapabilityError(CnoidalError):
    """Raised when a request exceeds an implementation cap (orders, indices)."""

    __slots__ = ()


class DegenerateEquationError(DomainError):
    """Raised when the wave equation degenerates (e.g. KdV with zero dispersion)."""

    __slots__ = ()


class NoSolutionError(CnoidalError):
    """Raised when the Kawahara parameters lie outside the region with a guaranteed root."""

    __slots__ = ()


class BracketError(CnoidalError):
    """Raised when no sign change of the Kawahara constraint is found in the scan range.

    Attributes
    ----------
    s_range : tuple[float, float]
        Scanned interval.
    g_range : tuple[float, float]
        Smallest and largest constraint value seen on the scan grid.
    """

    def __init__(self, message: str, *, s_range: tuple[float, float], g_range: tuple[float, float]) -> None:
        super().__init__(message)
        self.s_range = s_range
        self.g_range = g_range


class UnsupportedTransformError(CnoidalError):
    """Raised when shift/scale freedoms are requested for an equation that does not admit them."""

    __slots__ = ()


class ConstructionError(CnoidalError):
    """Raised when a solved travelling wave fails its residual cross-check."""

    __slots__ = ()


__all__ = [
    "BracketError",
    "CapabilityError",
    "CnoidalError",
    "ConstructionError",
    "DegenerateEquationError",
    "DomainError",
    "NoSolutionError",
    "UnsupportedTransformError",
]
