"""Cnoidal basis functions, their product identities and exact KdV/Kawahara travelling waves"""

from pdum.cnoidal.basis import (
    elliptic_form,
    eval_grid,
    eval_u,
    fourier_coeff,
    fourier_series,
    representation_used,
    soliton_train,
    truncation_K,
)
from pdum.cnoidal.coefficients import (
    F_sum,
    coeff_a,
    coeff_table,
    e_ell,
    identity_mean,
    leading_coefficient,
    lemma_a1,
    lemma_a2,
    product_identity_rows,
    ramanujan_sides,
    verify_convolution,
    verify_identity,
)
from pdum.cnoidal.projection import (
    basis_threshold,
    design_matrix,
    gram_cross_check,
    gram_matrix,
    lagrange_approximant,
    lagrange_tail,
    project,
)
from pdum.cnoidal.solvers import (
    apply_freedoms,
    in_gamma_region,
    integrated_residual,
    kawahara_g,
    kawahara_roots,
    kawahara_system_residuals,
    kdv_speed_poisson,
    ode_coefficient_residuals,
    pde_residual,
    solve_kawahara,
    solve_kdv,
    square_expansion,
)
from pdum.cnoidal.special_fns import (
    bernoulli,
    bernoulli_table,
    elliptic_E,
    elliptic_K,
    jacobi_cn,
    jacobi_sn_cn_dn,
    legendre_residual,
    modulus_from_s,
)
from pdum.cnoidal.types import (
    CnoidalError,
    CnoidalParam,
    CoeffTable,
    EllipticModulus,
    ProjectionResult,
    RepPolicy,
    SeriesRep,
    SeriesValue,
    TravellingWave,
)

__version__ = "0.1.0-alpha"


__all__ = [
    "__version__",
    # special functions
    "bernoulli",
    "bernoulli_table",
    "elliptic_K",
    "elliptic_E",
    "jacobi_cn",
    "jacobi_sn_cn_dn",
    "legendre_residual",
    "modulus_from_s",
    # basis
    "elliptic_form",
    "eval_grid",
    "eval_u",
    "fourier_coeff",
    "fourier_series",
    "representation_used",
    "soliton_train",
    "truncation_K",
    # coefficients
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
    # solvers
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
    # projection
    "basis_threshold",
    "design_matrix",
    "gram_cross_check",
    "gram_matrix",
    "lagrange_approximant",
    "lagrange_tail",
    "project",
    # types
    "CnoidalError",
    "CnoidalParam",
    "CoeffTable",
    "EllipticModulus",
    "ProjectionResult",
    "RepPolicy",
    "SeriesRep",
    "SeriesValue",
    "TravellingWave",
]
