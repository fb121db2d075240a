"""Public exports for pdum.cnoidal types."""

from __future__ import annotations

from .exceptions import (
    BracketError,
    CapabilityError,
    CnoidalError,
    ConstructionError,
    DegenerateEquationError,
    DomainError,
    NoSolutionError,
    UnsupportedTransformError,
)
from .param import (
    ELLIPTIC_CONVENTION,
    BernoulliKind,
    CnoidalParam,
    EllipticConvention,
    EllipticModulus,
    FourierCoeffs,
    RepPolicy,
    SeriesRep,
)
from .projection import ProjectionResult, ProjectionSolver
from .record import OutputRecord
from .series import CoeffTable, IdentityEntry, IdentityRow, SeriesValue, SingularConvention
from .wave import Equation, KawaharaConstraint, TravellingWave

__all__ = [
    "BernoulliKind",
    "BracketError",
    "CapabilityError",
    "CnoidalError",
    "CnoidalParam",
    "CoeffTable",
    "ConstructionError",
    "DegenerateEquationError",
    "DomainError",
    "ELLIPTIC_CONVENTION",
    "EllipticConvention",
    "EllipticModulus",
    "Equation",
    "FourierCoeffs",
    "IdentityEntry",
    "IdentityRow",
    "KawaharaConstraint",
    "NoSolutionError",
    "OutputRecord",
    "ProjectionResult",
    "ProjectionSolver",
    "RepPolicy",
    "SeriesRep",
    "SeriesValue",
    "SingularConvention",
    "TravellingWave",
    "UnsupportedTransformError",
]
