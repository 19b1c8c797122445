"""Truncated matrix trigonometric moment problem: solvability, determinacy and
the linear fractional parametrization of all solutions."""
from .analysis import Analysis, Tolerances, analyze
from .determinacy import DeterminacyReport, check_determinacy, unique_solution
from .gram_space import (OrthonormalBasis, apply_shift, build_basis, inner,
                         orthonormalize_primary, orthonormalize_secondary)
from .lft import (NevanlinnaCoefficients, SchurParameter, assemble_coefficients,
                  compute_structure, det_adjugate, evaluate_transform,
                  nevanlinna_coefficients, resolvent_oracle, taylor_moments)
from .measures import MatrixMeasure, herglotz, measure_from_unitary_extension, moment
from .moments import GramMatrix, MomentSequence, build_gram, check_solvable
from .polymatrix import PolyMatrix

__all__ = [
    "Analysis", "Tolerances", "analyze",
    "DeterminacyReport", "check_determinacy", "unique_solution",
    "OrthonormalBasis", "apply_shift", "build_basis", "inner",
    "orthonormalize_primary", "orthonormalize_secondary",
    "NevanlinnaCoefficients", "SchurParameter", "assemble_coefficients", "compute_structure",
    "det_adjugate", "evaluate_transform", "nevanlinna_coefficients", "resolvent_oracle",
    "taylor_moments",
    "MatrixMeasure", "herglotz", "measure_from_unitary_extension", "moment",
    "GramMatrix", "MomentSequence", "build_gram", "check_solvable",
    "PolyMatrix",
]
