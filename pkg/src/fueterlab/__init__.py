"""fueterlab: exact and numerical workbench for axial monogenic functions.

Clifford algebra arithmetic with exact rational or binary64 coefficients,
polynomials with Clifford coefficients (Dirac operator, Cauchy-Kowalevski
extension, generalized Hermite polynomials), an exact term algebra for
functions of (x0, r), transforms of holomorphic seeds into axial monogenic
pairs, and numerical oracles (finite differences, series evaluation, decay
scans) that cross-check the symbolic layer.
"""

from .axial import AxialExpr, d_lower, d_upper, diff, equals, eval_expr, format_axial, parse_axial
from .clifford import (
    Multivector,
    Paravector,
    conjugate,
    format_multivector,
    gp,
    grade_project,
    norm_sq,
    parse_multivector,
)
from .cliffpoly import (
    CliffPoly,
    HermiteResult,
    ck_extend_poly,
    coeff_c,
    cr_apply,
    cr_conj_apply,
    dirac,
    format_poly,
    hermite_closed,
    hermite_rec,
    is_homogeneous_monogenic,
    laplacian,
    parse_poly,
    poly_mul,
    sample_p0,
    sample_p1,
)
from .fueter import (
    AxialPair,
    HoloSeed,
    axial_to_poly,
    closed_form,
    coeff_a,
    double_factorial,
    fueter,
    fueter_via_laplacian,
    gauss_ck_pair,
    gauss_fund_pair,
    seed,
    triangle_check,
    vekua_ok,
    vekua_residual,
)
from .numeric import (
    DecayReport,
    EvalPoint,
    FDConfig,
    ProbeReport,
    ck_gauss_restriction,
    ck_gauss_series,
    decay_scan,
    entire_part_probe,
    eval_axial,
    fd_cr_residual,
)

__version__ = "0.1.0"

__all__ = [
    "AxialExpr",
    "AxialPair",
    "CliffPoly",
    "DecayReport",
    "EvalPoint",
    "FDConfig",
    "HermiteResult",
    "HoloSeed",
    "Multivector",
    "Paravector",
    "ProbeReport",
    "axial_to_poly",
    "ck_extend_poly",
    "ck_gauss_restriction",
    "ck_gauss_series",
    "closed_form",
    "coeff_a",
    "coeff_c",
    "conjugate",
    "cr_apply",
    "cr_conj_apply",
    "d_lower",
    "d_upper",
    "decay_scan",
    "diff",
    "dirac",
    "double_factorial",
    "entire_part_probe",
    "equals",
    "eval_axial",
    "eval_expr",
    "fd_cr_residual",
    "format_axial",
    "format_multivector",
    "format_poly",
    "fueter",
    "fueter_via_laplacian",
    "gauss_ck_pair",
    "gauss_fund_pair",
    "gp",
    "grade_project",
    "hermite_closed",
    "hermite_rec",
    "is_homogeneous_monogenic",
    "laplacian",
    "norm_sq",
    "parse_axial",
    "parse_multivector",
    "parse_poly",
    "poly_mul",
    "sample_p0",
    "sample_p1",
    "seed",
    "triangle_check",
    "vekua_ok",
    "vekua_residual",
]
