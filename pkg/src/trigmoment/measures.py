"""Finite atomic matrix measures on ``[0, 2pi)``.

The distribution function of a measure is ``M(0) = 0`` and
``M(t) = sum_{t_p < t} mass_p`` on ``(0, 2pi]``, i.e. left-continuous, so an atom
at ``t = 0`` shows up for every ``t > 0``.

Only atomic solutions are ever materialized here (the determinate case and
constant unitary parameters).  Solutions selected by non-unitary parameters
are represented solely by their transform, see :mod:`trigmoment.lft`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DiskViolation, ExtensionNotUnitary, NotUnitary
from .gram_space import OrthonormalBasis, inner
from .moments import GramMatrix, MomentSequence

PSD_TOL = 1e-9
UNITARY_TOL = 1e-9
CLUSTER_TOL = 1e-8
DROP_REL = 1e-12
TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class MatrixMeasure:
    N: int
    t: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float).reshape(-1)
        masses = np.asarray(self.masses, dtype=complex).reshape(len(t), self.N, self.N)
        if np.any((t < 0) | (t >= TWO_PI)):
            raise ValueError("atom positions must lie in [0, 2pi)")
        if np.any(np.diff(t) <= 1e-10):
            raise ValueError("atom positions must be strictly increasing")
        for p, m in enumerate(masses):
            scale = max(1.0, np.linalg.norm(m))
            if np.max(np.abs(m - m.conj().T), initial=0.0) > PSD_TOL * scale:
                raise ValueError(f"mass of atom {p} is not Hermitian")
            if self.N and np.linalg.eigvalsh(m)[0] < -PSD_TOL * scale:
                raise ValueError(f"mass of atom {p} is not positive semidefinite")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "masses", masses)

    @property
    def atoms(self):
        return list(zip(self.t, self.masses))

    def moment(self, n: int) -> np.ndarray:
        return np.einsum("p,pij->ij", np.exp(1j * n * self.t), self.masses)

    def moments(self, d: int) -> MomentSequence:
        return MomentSequence(np.array([self.moment(n) for n in range(d + 1)]))

    def herglotz(self, zeta: complex) -> np.ndarray:
        """``sum_p mass_p / (1 - zeta e^{i t_p})`` for ``|zeta| < 1``."""
        if abs(zeta) >= 1:
            raise DiskViolation(f"|zeta| = {abs(zeta):.6g} is not inside the unit disk")
        w = 1.0 / (1.0 - zeta * np.exp(1j * self.t))
        return np.einsum("p,pij->ij", w, self.masses)

    def distribution(self, t: float) -> np.ndarray:
        """``M(t)`` under the left-continuous convention."""
        return self.masses[self.t < t].sum(axis=0)


def moment(mu: MatrixMeasure, n: int) -> np.ndarray:
    return mu.moment(n)


def herglotz(mu: MatrixMeasure, zeta: complex) -> np.ndarray:
    return mu.herglotz(zeta)


def from_atoms(t, masses, N: int | None = None) -> MatrixMeasure:
    """Sort, wrap into ``[0, 2pi)`` and merge coincident atoms."""
    t = np.mod(np.asarray(t, dtype=float), TWO_PI)
    masses = np.asarray(masses, dtype=complex)
    N = masses.shape[-1] if N is None else N
    t = np.where(TWO_PI - t < 1e-12, 0.0, t)
    order = np.argsort(t, kind="stable")
    ts, ms = [], []
    for i in order:
        if ts and t[i] - ts[-1] <= 1e-10:
            ms[-1] = ms[-1] + masses[i]
        else:
            ts.append(t[i])
            ms.append(masses[i].copy())
    return MatrixMeasure(N=N, t=np.array(ts), masses=np.array(ms).reshape(len(ts), N, N))


def spectral_measure(U: np.ndarray, xi: np.ndarray, drop_below: float = 0.0,
                     cluster_tol: float = CLUSTER_TOL) -> MatrixMeasure:
    """Atomic measure ``m_{k,j}(t) = (E_t xi_k, xi_j)`` of a unitary matrix.

    ``U`` is the matrix of the unitary in an orthonormal basis and column ``k``
    of ``xi`` holds the coordinates of ``x_k`` in that basis.
    """
    N = xi.shape[1]
    if U.shape[0] == 0:
        return MatrixMeasure(N=N, t=np.zeros(0), masses=np.zeros((0, N, N)))
    # complex Schur form of a normal matrix is diagonal with orthonormal vectors
    D, Q = scipy.linalg.schur(U, output="complex")
    lam = np.diag(D)
    # group eigenvalues by chaining neighbours along the circle
    angle = np.mod(np.angle(lam), TWO_PI)
    order = np.argsort(angle)
    clusters = [[order[0]]]
    for a, b in zip(order[:-1], order[1:]):
        if abs(lam[b] - lam[a]) <= cluster_tol:
            clusters[-1].append(b)
        else:
            clusters.append([b])
    if len(clusters) > 1 and abs(lam[clusters[0][0]] - lam[clusters[-1][-1]]) <= cluster_tol:
        clusters[0] = clusters.pop() + clusters[0]
    ts, ms = [], []
    for c in clusters:
        Qc = Q[:, c]
        proj = Qc.conj().T @ xi
        # mass[k, j] = (P xi_k, xi_j) = xi_j^H P xi_k
        mass = (proj.conj().T @ proj).T
        mass = (mass + mass.conj().T) / 2
        if np.linalg.norm(mass) < drop_below:
            continue
        ts.append(np.angle(np.mean(lam[c])))
        ms.append(mass)
    return from_atoms(ts, np.array(ms).reshape(len(ts), N, N), N=N)


def _check_unitary(U, tol, exc, what):
    dev = np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0])), initial=0.0)
    if dev > tol:
        raise exc(f"{what} deviates from unitarity by {dev:.3g}")


def extension_matrix(basis: OrthonormalBasis, g: GramMatrix, F: np.ndarray) -> np.ndarray:
    """Matrix of ``A (+) Phi`` in the first basis, ``Phi u_{tau+k} = sum_l F[l, k] v_{tau+l}``."""
    tau, delta = basis.tau, basis.delta
    v_coords = inner(basis.v, basis.u, g).T          # column k: coordinates of v_k
    U = np.empty((basis.dim, basis.dim), dtype=complex)
    U[:, :tau] = v_coords[:, :tau]
    U[:, tau:] = v_coords[:, tau:] @ np.asarray(F).reshape(delta, delta)
    return U


def measure_from_unitary_extension(basis: OrthonormalBasis, g: GramMatrix, F) -> MatrixMeasure:
    """Atomic solution generated by a constant unitary ``delta x delta`` parameter."""
    F = np.asarray(F, dtype=complex).reshape(basis.delta, basis.delta)
    _check_unitary(F, UNITARY_TOL, NotUnitary, "parameter F")
    U = extension_matrix(basis, g, F)
    _check_unitary(U, UNITARY_TOL, ExtensionNotUnitary, "extension A (+) Phi")
    drop = DROP_REL * np.linalg.norm(g.gamma[:g.N, :g.N])
    return spectral_measure(U, basis.x_coordinates(g), drop_below=drop)
