"""Determinacy by two independent routes and the unique solution when it exists.

Route (B) reads the defect off the orthonormalization: the problem is
determinate iff no ``x_r`` with ``r >= dN`` survives.  Route (C) asks whether
each of the linear systems

    sum_{n < dN} alpha_{r,n} gamma[n, j] = gamma[r, j],   j = 0 .. dN+N-1

is consistent, for every ``r`` in ``dN .. dN+N-1``, judged by the relative
least-squares residual.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NonUnitary, NotDeterminate, RouteDisagreement
from .gram_space import OrthonormalBasis, apply_shift, inner
from .measures import MatrixMeasure, spectral_measure, DROP_REL
from .moments import GramMatrix

DEFAULT_DET_TOL = 1e-8
UNITARY_TOL = 1e-9


@dataclass(frozen=True)
class DeterminacyReport:
    determinate: bool
    defect: int
    condition_c_residuals: np.ndarray
    condition_c: bool
    tol: float
    agree: bool = True

    @property
    def borderline(self) -> bool:
        """Some residual lies within a factor 10 of the tolerance."""
        r = self.condition_c_residuals
        return bool(np.any((r > self.tol / 10) & (r < self.tol * 10)))


def condition_c_residuals(g: GramMatrix) -> np.ndarray:
    """Relative least-squares residual of the consistency system for each ``r``."""
    N, dN = g.N, g.d * g.N
    scale = g.scale ** 2
    if scale == 0:
        return np.zeros(N)
    # unknowns alpha_{r,n}; one equation per column j
    lhs = g.gamma[:dN, :].T
    rhs = g.gamma[dN:, :].T
    alpha, *_ = scipy.linalg.lstsq(lhs, rhs)
    return np.linalg.norm(lhs @ alpha - rhs, axis=0) / scale


def check_determinacy(g: GramMatrix, basis: OrthonormalBasis,
                      tol: float = DEFAULT_DET_TOL) -> DeterminacyReport:
    res = condition_c_residuals(g)
    cond_c = bool(np.all(res <= tol))
    cond_b = basis.delta == 0
    if cond_b != cond_c:
        raise RouteDisagreement(
            f"defect {basis.delta} says {'' if cond_b else 'in'}determinate but the linear "
            f"systems say {'' if cond_c else 'in'}determinate (max residual {res.max():.3g}, "
            f"tol {tol:.3g})", defect=basis.delta, residuals=res)
    return DeterminacyReport(determinate=cond_b, defect=basis.delta,
                             condition_c_residuals=res, condition_c=cond_c, tol=tol)


def shift_matrix(basis: OrthonormalBasis, g: GramMatrix) -> np.ndarray:
    """Matrix ``(A u_k, u_j)`` of the shift in the first basis (first ``tau`` columns)."""
    return inner(apply_shift(basis.u[:basis.tau], g.N), basis.u, g).T


def unique_solution(g: GramMatrix, basis: OrthonormalBasis) -> MatrixMeasure:
    """Spectral measure of the (then unitary) shift evaluated on ``x_0 .. x_{N-1}``."""
    if basis.delta != 0:
        raise NotDeterminate(f"defect is {basis.delta}; the problem has many solutions")
    N = g.N
    if basis.tau == 0:
        return MatrixMeasure(N=N, t=np.zeros(0), masses=np.zeros((0, N, N)))
    U = shift_matrix(basis, g)
    dev = np.max(np.abs(U.conj().T @ U - np.eye(basis.tau)))
    if dev > UNITARY_TOL:
        raise NonUnitary(f"matrix of the shift deviates from unitarity by {dev:.3g}")
    drop = DROP_REL * np.linalg.norm(g.gamma[:N, :N])
    return spectral_measure(U, basis.x_coordinates(g), drop_below=drop)
