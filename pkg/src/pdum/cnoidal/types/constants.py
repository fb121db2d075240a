"""Shared constants for pdum.cnoidal.

Every public operation accepts the relevant tolerance or cap as a keyword-only override;
the values here are the defaults.
"""

from __future__ import annotations

# Series summation
DEFAULT_TOL: float = 1e-14
MAX_SERIES_TERMS: int = 100_000

# Auto representation switch (e^{-pi/s} vs e^{-pi s} decay rates balance at s = 1)
REP_SWITCH_S: float = 1.0

# Implementation caps
BERNOULLI_CAP: int = 64
DERIVATIVE_CAP: int = 16
COEFF_CAP: int = 8
LARGE_S_E_MAX_ELL: int = 8
LARGE_S_F_MAX_ELL: int = 8
LARGE_S_F_PRINTED_MAX_ELL: int = 4

# Elliptic functions
AGM_RTOL: float = 1e-15
AGM_MAX_ITER: int = 64
MODULUS_RTOL: float = 1e-13
PRECISION_WARN_S: tuple[float, float] = (1e-3, 1e3)

# Basis evaluation: truncation tolerance relative to max(1, coefficient scale)
EVAL_RTOL: float = 1e-17
SOLITON_IMAGE_TOL: float = 1e-17

# Kawahara root search: log-spaced scan (s_min, s_max, points) then Brent polish
ROOT_SCAN: tuple[float, float, int] = (0.01, 20.0, 400)
ROOT_XTOL: float = 1e-13
GAMMA_RATIO: float = -13.0
CONSTRUCTION_TOL: float = 1e-8

# Projection
GRAM_COND_LIMIT: float = 1e12
TIKHONOV_SCALE: float = 1e-12
MIN_PROJECTION_GRID: int = 64

# CLI
CLI_TOL: float = 1e-8
FLOAT_DIGITS: int = 17

__all__ = [
    "AGM_MAX_ITER",
    "AGM_RTOL",
    "BERNOULLI_CAP",
    "CLI_TOL",
    "COEFF_CAP",
    "CONSTRUCTION_TOL",
    "DEFAULT_TOL",
    "DERIVATIVE_CAP",
    "EVAL_RTOL",
    "FLOAT_DIGITS",
    "GAMMA_RATIO",
    "GRAM_COND_LIMIT",
    "LARGE_S_E_MAX_ELL",
    "LARGE_S_F_MAX_ELL",
    "LARGE_S_F_PRINTED_MAX_ELL",
    "MAX_SERIES_TERMS",
    "MIN_PROJECTION_GRID",
    "MODULUS_RTOL",
    "PRECISION_WARN_S",
    "REP_SWITCH_S",
    "ROOT_SCAN",
    "ROOT_XTOL",
    "SOLITON_IMAGE_TOL",
    "TIKHONOV_SCALE",
]
