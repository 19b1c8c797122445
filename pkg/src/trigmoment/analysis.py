"""One-call pipeline: Gram matrix, solvability, bases, determinacy, coefficients."""
from __future__ import annotations

from dataclasses import dataclass

from .determinacy import DEFAULT_DET_TOL, DeterminacyReport, check_determinacy, unique_solution
from .gram_space import DEFAULT_RANK_TOL, OrthonormalBasis, build_basis
from .lft import NevanlinnaCoefficients, nevanlinna_coefficients
from .measures import MatrixMeasure, measure_from_unitary_extension
from .moments import DEFAULT_PSD_TOL, GramMatrix, MomentSequence, Solvability, build_gram, check_solvable


@dataclass(frozen=True)
class Tolerances:
    psd_tol: float = DEFAULT_PSD_TOL
    rank_tol: float = DEFAULT_RANK_TOL
    det_tol: float = DEFAULT_DET_TOL


@dataclass(frozen=True)
class Analysis:
    moments: MomentSequence
    gram: GramMatrix
    solvability: Solvability
    basis: OrthonormalBasis | None = None
    report: DeterminacyReport | None = None
    coefficients: NevanlinnaCoefficients | None = None

    @property
    def determinate(self) -> bool:
        return self.report is not None and self.report.determinate

    def unique_solution(self) -> MatrixMeasure:
        return unique_solution(self.gram, self.basis)

    def extension(self, F) -> MatrixMeasure:
        return measure_from_unitary_extension(self.basis, self.gram, F)


def analyze(m: MomentSequence, tol: Tolerances = Tolerances()) -> Analysis:
    """Run everything that applies; stops after the solvability test if it fails."""
    g = build_gram(m)
    solv = check_solvable(g, tol.psd_tol)
    if not solv.solvable:
        return Analysis(moments=m, gram=g, solvability=solv)
    basis = build_basis(g, tol.rank_tol)
    report = check_determinacy(g, basis, tol.det_tol)
    coeffs = nevanlinna_coefficients(basis, g) if basis.delta > 0 else None
    return Analysis(moments=m, gram=g, solvability=solv, basis=basis, report=report,
                    coefficients=coeffs)
