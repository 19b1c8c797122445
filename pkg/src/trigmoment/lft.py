"""Coefficients of the linear fractional parametrization of all solutions.

For an indeterminate problem with defect ``delta`` every solution ``M`` is
obtained from a contractive analytic ``delta x delta`` function ``F`` by

    R(z) = A(z)/h(z) - z/h(z)^2 * B(z) F(z) (I + C(z) F(z)/h(z))^{-1} D(z)

where ``R(z) = int 1/(1 - z e^{it}) dM^T(t)``.  Note the transpose: ``R`` is the
transform of ``M^T`` and ``R(0) = S_0^T``.

The scalar polynomial ``h`` and the matrix polynomials ``A, B, C, D`` are built
from the inner products of the two orthonormal bases; see
:func:`nevanlinna_coefficients`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DiskViolation, NodeDegeneracy, NotContractive, SingularKernel, SingularSystem
from .gram_space import OrthonormalBasis, inner
from .measures import extension_matrix
from .moments import GramMatrix
from .polymatrix import PolyMatrix, polyval

CONTRACTIVE_TOL = 1e-9
GRID_ANGLES = 64
GRID_RADII = (0.3, 0.6, 0.9, 0.99)
NODE_RADIUS = 1.0
NODE_DET_MIN = 1e-12
NODE_RETRIES = 8
TAYLOR_RADIUS = 0.5
TAYLOR_NODES = 256
COND_MAX = 1e12


def disk_grid(angles: int = GRID_ANGLES, radii=GRID_RADII) -> np.ndarray:
    """Validation grid of ``angles x len(radii)`` points inside the unit disk."""
    th = 2 * np.pi * np.arange(angles) / angles
    return (np.asarray(radii)[:, None] * np.exp(1j * th)[None, :]).ravel()


@dataclass(frozen=True)
class SchurParameter:
    """Matrix polynomial ``F(z) = sum_k coeffs[k] z^k``, contractive on the disk.

    Contractivity is only checked by sampling singular values on
    :func:`disk_grid`, not certified.
    """

    delta: int
    coeffs: np.ndarray
    validate: bool = True

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        c = np.zeros((1, 0, 0), complex) if self.delta == 0 else c.reshape(-1, self.delta, self.delta)
        if c.shape[0] == 0:
            raise ValueError("a parameter needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)
        if self.validate:
            worst = self.max_singular_value()
            if worst > 1 + CONTRACTIVE_TOL:
                raise NotContractive(f"largest singular value {worst:.6g} exceeds 1 on the disk grid")

    @classmethod
    def constant(cls, F, validate: bool = True) -> "SchurParameter":
        F = np.atleast_2d(np.asarray(F, dtype=complex))
        return cls(delta=F.shape[0], coeffs=F[None], validate=validate)

    @property
    def is_constant(self) -> bool:
        return not np.any(self.coeffs[1:])

    def __call__(self, z) -> np.ndarray:
        return PolyMatrix(self.coeffs)(z)

    def max_singular_value(self) -> float:
        if self.delta == 0:
            return 0.0
        pts = disk_grid() if not self.is_constant else np.zeros(1)
        return float(np.max(np.linalg.svd(self(pts), compute_uv=False)))


def _as_param(F, delta: int) -> SchurParameter:
    if isinstance(F, SchurParameter):
        if F.delta != delta:
            raise ValueError(f"parameter has size {F.delta}, the defect is {delta}")
        return F
    return SchurParameter.constant(np.asarray(F, dtype=complex).reshape(delta, delta))


@dataclass(frozen=True)
class Structure:
    """Constant matrices read off the two bases.

    ``G0[j, k] = (v_k, u_j)`` for ``j, k < tau`` so that ``A_0(z) = I - z G0``;
    ``C1`` is the block below it (``C_0(z) = -z C1``); ``W`` and ``T`` are the
    columns ``l >= tau``; ``K[j, k] = (x_k, u_j)`` for ``j < rho``.
    """

    G0: np.ndarray
    C1: np.ndarray
    W: np.ndarray
    T: np.ndarray
    K: np.ndarray


def compute_structure(basis: OrthonormalBasis, g: GramMatrix) -> Structure:
    tau, rho = basis.tau, basis.rho
    P = inner(basis.v, basis.u, g).T
    return Structure(G0=P[:tau, :tau], C1=P[tau:, :tau], W=P[:tau, tau:], T=P[tau:, tau:],
                     K=basis.x_coordinates(g)[:rho])


def _adjugate(A: np.ndarray):
    """Determinant and adjugate through the SVD; stable for singular ``A``."""
    U, s, Vh = np.linalg.svd(A)
    phase = np.linalg.det(U) * np.linalg.det(Vh)
    n = len(s)
    cof = np.array([np.prod(np.delete(s, i)) for i in range(n)])
    # A = U S Vh  =>  adj(A) = adj(Vh) adj(S) adj(U) = phase * Vh^H adj(S) U^H
    return phase * np.prod(s), phase * (Vh.conj().T * cof) @ U.conj().T


def det_adjugate(G0: np.ndarray):
    """``h(z) = det(I - z G0)`` and ``adj(I - z G0)`` by evaluation and interpolation.

    Returns the coefficient vector of ``h`` (length ``tau + 1``) and the
    adjugate as a :class:`PolyMatrix` of degree bound ``tau - 1``.
    """
    G0 = np.asarray(G0, dtype=complex)
    tau = G0.shape[0]
    if tau == 0:
        return np.ones(1, dtype=complex), PolyMatrix(np.zeros((1, 0, 0)))
    M = max(tau + 2, 8)
    base = 2 * np.pi * np.arange(M) / M
    for attempt in range(NODE_RETRIES + 1):
        phi = attempt * np.pi / (M * (NODE_RETRIES + 1))
        z = NODE_RADIUS * np.exp(1j * (base + phi))
        vals = [_adjugate(np.eye(tau) - zm * G0) for zm in z]
        dets = np.array([v[0] for v in vals])
        if np.min(np.abs(dets)) >= NODE_DET_MIN:
            break
    else:
        raise NodeDegeneracy("interpolation nodes keep hitting zeros of the determinant")
    adjs = np.array([v[1] for v in vals])
    k = np.arange(M)
    norm = (NODE_RADIUS * np.exp(1j * phi)) ** k
    h = np.fft.fft(dets) / M / norm
    adj = np.fft.fft(adjs, axis=0) / M / norm[:, None, None]
    return h[:tau + 1], PolyMatrix(adj[:max(tau, 1)])


@dataclass(frozen=True)
class NevanlinnaCoefficients:
    N: int
    rho: int
    tau: int
    delta: int
    h: np.ndarray
    A_poly: PolyMatrix
    B_poly: PolyMatrix
    C_poly: PolyMatrix
    D_poly: PolyMatrix
    adj: PolyMatrix
    structure: Structure

    @property
    def W(self):
        return self.structure.W

    @property
    def T_mat(self):
        return self.structure.T

    @property
    def K_mat(self):
        return self.structure.K

    @property
    def G0(self):
        return self.structure.G0

    @property
    def C1(self):
        return self.structure.C1

    def h_at(self, z):
        return polyval(self.h, z)


def assemble_coefficients(s: Structure, h: np.ndarray, adj: PolyMatrix) -> NevanlinnaCoefficients:
    rho, N = s.K.shape
    tau, delta = s.W.shape
    K, KH = s.K, s.K.conj().T
    C0 = PolyMatrix.monomial(-s.C1, 1)
    A1, A2, A3 = adj[:rho, :rho], adj[:rho, :], adj[:, :rho]
    A = KH @ A1 @ K
    B = KH @ A2 @ s.W
    D = C0 @ A3 @ K
    C = (C0 @ adj @ s.W).shift(1) - PolyMatrix(s.T[None]).scale(h).shift(1)

    def trim(p: PolyMatrix, deg: int) -> PolyMatrix:
        return PolyMatrix(p.coeffs[:max(deg, 0) + 1])

    return NevanlinnaCoefficients(
        N=N, rho=rho, tau=tau, delta=delta, h=h,
        A_poly=trim(A, tau - 1), B_poly=trim(B, tau - 1), C_poly=trim(C, tau + 1),
        D_poly=trim(D, tau), adj=adj, structure=s)


def nevanlinna_coefficients(basis: OrthonormalBasis, g: GramMatrix) -> NevanlinnaCoefficients:
    s = compute_structure(basis, g)
    h, adj = det_adjugate(s.G0)
    return assemble_coefficients(s, h, adj)


def _check_disk(zeta):
    worst = np.max(np.abs(zeta), initial=0.0)
    if worst >= 1:
        raise DiskViolation(f"|zeta| = {worst:.6g} is not inside the unit disk")


def evaluate_transform(c: NevanlinnaCoefficients, F, zeta) -> np.ndarray:
    """Value at ``zeta`` of the transform of ``M^T`` for the solution selected by ``F``.

    ``zeta`` may be an array of points; the result then has shape
    ``zeta.shape + (N, N)``.
    """
    zeta = np.asarray(zeta, dtype=complex)
    _check_disk(zeta)
    F = _as_param(F, c.delta)
    h = c.h_at(zeta)[..., None, None]
    out = c.A_poly(zeta) / h
    if c.delta == 0:
        return out
    Fz = F(zeta)
    kernel = np.eye(c.delta) + c.C_poly(zeta) @ Fz / h
    if np.max(np.linalg.cond(kernel), initial=0.0) > COND_MAX:
        raise SingularKernel("I + C F / h is numerically singular on the requested points")
    z = zeta[..., None, None]
    return out - z / h ** 2 * c.B_poly(zeta) @ Fz @ np.linalg.solve(kernel, c.D_poly(zeta))


def resolvent_oracle(basis: OrthonormalBasis, g: GramMatrix, F, zeta: complex) -> np.ndarray:
    """Brute-force ``((I - zeta (A (+) Phi))^{-1} x_k, x_j)`` by inverting the full matrix.

    Used only to check :func:`evaluate_transform`.
    """
    _check_disk(zeta)
    F = _as_param(F, basis.delta)
    U = extension_matrix(basis, g, F(zeta))
    M1 = np.eye(basis.dim) - zeta * U
    if np.linalg.cond(M1) > COND_MAX:
        raise SingularSystem(f"I - zeta (A (+) Phi) is singular at zeta = {zeta}")
    rho = basis.rho
    M2 = np.linalg.inv(M1)[:rho, :rho]
    K = basis.x_coordinates(g)[:rho]
    return K.conj().T @ M2 @ K


def taylor_moments(c: NevanlinnaCoefficients, F, count: int,
                   radius: float = TAYLOR_RADIUS, nodes: int = TAYLOR_NODES) -> np.ndarray:
    """First ``count`` Taylor coefficients at 0 of the transform, by the trapezoidal rule.

    Coefficient ``n`` is ``int e^{int} dM^T``, so the first ``d+1`` must be ``S_n^T``.
    """
    F = _as_param(F, c.delta)
    z = radius * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    vals = evaluate_transform(c, F, z)
    coef = np.fft.fft(vals, axis=0) / nodes
    return coef[:count] / (radius ** np.arange(count))[:, None, None]
