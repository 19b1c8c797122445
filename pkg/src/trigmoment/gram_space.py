"""The Hilbert space spanned by the classes ``x_n`` and the isometric shift on it.

Elements of the space are handled through their coefficient vectors with
respect to the spanning family ``x_0, ..., x_{(d+1)N-1}``: a plain complex
array of length ``(d+1)N``.  Two coefficient vectors represent the same element
when their difference has zero seminorm.  Families of elements are stacked as
rows of a 2-D array.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DefectMismatch, DomainViolation, EmptyBasis
from .moments import GramMatrix

DEFAULT_RANK_TOL = 1e-6
SHIFT_DOMAIN_TOL = 1e-12
BORDERLINE_FACTOR = 10.0


def inner(a, b, g: GramMatrix):
    """``sum_{n,r} a_n conj(b_r) gamma[n, r]``, linear in ``a``.

    Also accepts stacked rows, returning the matrix ``inner(a_i, b_j)``.
    """
    return np.asarray(a) @ g.gamma @ np.conj(np.asarray(b)).T


def seminorm(a, g: GramMatrix) -> float:
    # clamp tiny negative values produced by roundoff on null vectors
    return float(np.sqrt(max(0.0, inner(a, a, g).real)))


def apply_shift(a, N: int, tol: float = SHIFT_DOMAIN_TOL) -> np.ndarray:
    """Map ``sum a_k x_k`` to ``sum a_k x_{k+N}``; works row-wise on 2-D input.

    Raises DomainViolation if a coefficient at index ``>= dN`` is nonzero.
    """
    a = np.asarray(a, dtype=complex)
    tail = a[..., -N:]
    if tail.size and np.max(np.abs(tail)) > tol:
        raise DomainViolation(
            f"coefficient of magnitude {np.max(np.abs(tail)):.3g} outside the "
            "domain of the shift (indices >= dN)")
    out = np.zeros_like(a)
    out[..., N:] = a[..., :-N]
    return out


@dataclass(frozen=True)
class OrthonormalBasis:
    """Both orthonormal bases of the space plus the index sets and dimensions.

    ``u`` holds the first basis (rows, in construction order), ``v`` the second
    one: ``v[k] = A u[k]`` for ``k < tau`` followed by the ``delta`` vectors
    orthogonal to the range of the shift.  ``omega1``/``omega2`` are the
    accepted step indices of the two passes; ``n_norms``/``m_norms`` are the
    residual seminorms seen at every step and ``threshold``/``m_threshold`` the
    acceptance bounds.  The second pass orthogonalizes unit vectors, so its
    bound is ``rank_tol`` itself while the first one scales with the data.
    """

    u: np.ndarray
    omega1: tuple
    rho: int
    tau: int
    delta: int
    n_norms: np.ndarray
    threshold: float
    v: np.ndarray | None = None
    omega2: tuple | None = None
    m_norms: np.ndarray | None = None
    m_threshold: float = 0.0

    @property
    def dim(self) -> int:
        return self.tau + self.delta

    @property
    def determinate(self) -> bool:
        return self.delta == 0

    @property
    def borderline(self) -> bool:
        """True when some residual lies within a factor 10 of its threshold."""
        pairs = [(self.n_norms, self.threshold)]
        if self.m_norms is not None:
            pairs.append((self.m_norms, self.m_threshold))
        for vals, thr in pairs:
            if thr > 0 and np.any((vals > thr / BORDERLINE_FACTOR) & (vals < thr * BORDERLINE_FACTOR)):
                return True
        return False

    def coordinates(self, w, g: GramMatrix) -> np.ndarray:
        """Coordinates ``(w, u_j)`` of element(s) ``w`` in the first basis."""
        return inner(w, self.u, g)

    def x_coordinates(self, g: GramMatrix) -> np.ndarray:
        """``(dim, N)`` matrix whose column ``k`` holds the coordinates of ``x_k``."""
        return (g.gamma[:g.N] @ np.conj(self.u).T).T


def _residual(x, family, g: GramMatrix):
    # two projection passes: single-pass Gram-Schmidt drifts under a semidefinite form
    r = np.array(x, dtype=complex)
    if len(family):
        for _ in range(2):
            r = r - inner(r, family, g) @ family
    return r, seminorm(r, g)


def orthonormalize_primary(g: GramMatrix, rank_tol: float = DEFAULT_RANK_TOL) -> OrthonormalBasis:
    """Gram-Schmidt over ``x_0, ..., x_{(d+1)N-1}`` in index order, skipping null residuals."""
    n, N, dN = g.n_total, g.N, g.d * g.N
    threshold = rank_tol * g.scale
    if g.is_zero:
        return OrthonormalBasis(u=np.zeros((0, n), complex), omega1=(), rho=0, tau=0, delta=0,
                                n_norms=np.zeros(n), threshold=0.0,
                                v=np.zeros((0, n), complex), omega2=(), m_norms=np.zeros(0))
    accepted, omega1, norms = [], [], np.zeros(n)
    eye = np.eye(n, dtype=complex)
    for j in range(n):
        r, nj = _residual(eye[j], np.array(accepted).reshape(-1, n), g)
        norms[j] = nj
        if nj > threshold:
            accepted.append(r / nj)
            omega1.append(j)
    rho = sum(1 for j in omega1 if j < N)
    tau = sum(1 for j in omega1 if j < dN)
    if rho == 0:
        raise EmptyBasis("no index below N survives although the Gram matrix is nonzero")
    return OrthonormalBasis(u=np.array(accepted), omega1=tuple(omega1), rho=rho, tau=tau,
                            delta=len(omega1) - tau, n_norms=norms, threshold=threshold)


def orthonormalize_secondary(basis: OrthonormalBasis, g: GramMatrix,
                             rank_tol: float = DEFAULT_RANK_TOL) -> OrthonormalBasis:
    """Complete ``A u_0, ..., A u_{tau-1}`` to a basis using ``u_0, ..., u_{rho-1}``."""
    n = g.n_total
    threshold = rank_tol
    vs = list(apply_shift(basis.u[:basis.tau], g.N)) if basis.tau else []
    omega2, norms = [], np.zeros(basis.rho)
    for j in range(basis.rho):
        r, mj = _residual(basis.u[j], np.array(vs).reshape(-1, n), g)
        norms[j] = mj
        if mj > threshold:
            vs.append(r / mj)
            omega2.append(j)
    if len(omega2) != basis.delta:
        raise DefectMismatch(
            f"second pass found {len(omega2)} vectors but the defect is {basis.delta}; "
            "the rank tolerance misclassifies this instance")
    return OrthonormalBasis(u=basis.u, omega1=basis.omega1, rho=basis.rho, tau=basis.tau,
                            delta=basis.delta, n_norms=basis.n_norms, threshold=basis.threshold,
                            v=np.array(vs).reshape(-1, n), omega2=tuple(omega2), m_norms=norms,
                            m_threshold=threshold)


def build_basis(g: GramMatrix, rank_tol: float = DEFAULT_RANK_TOL) -> OrthonormalBasis:
    """Run both passes."""
    basis = orthonormalize_primary(g, rank_tol)
    if g.is_zero:
        return basis
    return orthonormalize_secondary(basis, g, rank_tol)
