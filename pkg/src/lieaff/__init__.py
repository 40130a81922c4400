"""Exact-arithmetic toolkit for affine structures on nilpotent contact Lie algebras.

Builds and verifies flat torsion-free products on one-dimensional central
extensions of symplectic nilpotent Lie algebras, entirely over Q.
"""

from .extension import (
    CentralExtension,
    LiftData,
    LiftSolveResult,
    Verdict,
    build_lift,
    central_extend,
    curvature_expansions,
    half_case_residuals,
    is_one_dim_rep,
    lift_curvature_defects,
    lift_report,
    lift_torsion_defects,
    necessary_v_residuals,
    random_lift_data,
    solve_lift_trivial,
    solve_lift_with_alpha,
    theorem_verdict,
)
from .liecore import (
    CentralQuotient,
    KForm,
    LieAlgebra,
    Subspace,
    cocycle_defects,
    differential,
    form_add,
    quotient_by_center,
)
from .ratlin import (
    LinearSolution,
    Matrix,
    Rational,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    solve_linear,
)
from .structures import (
    AffineReport,
    BilinearProduct,
    ContactReport,
    SymplecticReport,
    affine_from_symplectic,
    contact_test,
    curvature,
    defining_relation_defects,
    exact_cocycle_obstruction,
    search_contact_form,
    symplectic_check,
    verify_affine,
    wedge_eval_top,
)

__all__ = [
    "AffineReport",
    "BilinearProduct",
    "CentralExtension",
    "CentralQuotient",
    "ContactReport",
    "KForm",
    "LieAlgebra",
    "LiftData",
    "LiftSolveResult",
    "LinearSolution",
    "Matrix",
    "Rational",
    "Subspace",
    "SymplecticReport",
    "Verdict",
    "affine_from_symplectic",
    "build_lift",
    "central_extend",
    "cocycle_defects",
    "contact_test",
    "curvature",
    "curvature_expansions",
    "defining_relation_defects",
    "differential",
    "exact_cocycle_obstruction",
    "form_add",
    "format_rational",
    "half_case_residuals",
    "is_one_dim_rep",
    "kernel_basis",
    "lift_curvature_defects",
    "lift_report",
    "lift_torsion_defects",
    "necessary_v_residuals",
    "parse_rational",
    "quotient_by_center",
    "random_lift_data",
    "rank",
    "search_contact_form",
    "solve_lift_trivial",
    "solve_lift_with_alpha",
    "solve_linear",
    "symplectic_check",
    "theorem_verdict",
    "verify_affine",
    "wedge_eval_top",
]
