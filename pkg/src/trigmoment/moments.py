"""Moment sequences, the block-Toeplitz Gram matrix and the solvability test."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import EigenFailure

DEFAULT_PSD_TOL = 1e-10


@dataclass(frozen=True)
class MomentSequence:
    """Prescribed moments ``S_0, ..., S_d``, each an ``N x N`` complex matrix.

    ``S`` is stored as a read-only array of shape ``(d + 1, N, N)``.
    """

    S: np.ndarray

    def __post_init__(self):
        S = np.array(self.S, dtype=complex)
        if S.ndim != 3 or S.shape[1] != S.shape[2] or S.shape[1] == 0:
            raise ValueError(f"moments must have shape (d+1, N, N), got {S.shape}")
        if S.shape[0] < 2:
            raise ValueError("at least two moments are required (d >= 1)")
        S.setflags(write=False)
        object.__setattr__(self, "S", S)

    @property
    def N(self) -> int:
        return self.S.shape[1]

    @property
    def d(self) -> int:
        return self.S.shape[0] - 1

    def moment(self, k: int) -> np.ndarray:
        """``S_k`` for ``-d <= k <= d`` using ``S_{-k} = S_k^*``."""
        if abs(k) > self.d:
            raise IndexError(f"moment index {k} outside [-{self.d}, {self.d}]")
        return self.S[k] if k >= 0 else self.S[-k].conj().T


@dataclass(frozen=True)
class GramMatrix:
    """The Hermitian block-Toeplitz matrix with block ``(i, j)`` equal to ``S_{i-j}``."""

    gamma: np.ndarray
    N: int
    d: int
    _eig: tuple = field(default=None, repr=False, compare=False)

    @property
    def n_total(self) -> int:
        return (self.d + 1) * self.N

    @property
    def scale(self) -> float:
        """Square root of the largest diagonal entry; the natural seminorm unit."""
        return float(np.sqrt(max(np.max(self.gamma.diagonal().real), 0.0)))

    @property
    def is_zero(self) -> bool:
        return not np.any(self.gamma)

    def eigenvalues(self) -> np.ndarray:
        if self._eig is None:
            try:
                w = scipy.linalg.eigvalsh(self.gamma)
            except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
                raise EigenFailure(str(exc)) from exc
            object.__setattr__(self, "_eig", (w,))
        return self._eig[0]

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues()[0])


def build_gram(m: MomentSequence) -> GramMatrix:
    N, d = m.N, m.d
    n = (d + 1) * N
    gamma = np.zeros((n, n), dtype=complex)
    for i in range(d + 1):
        for j in range(i + 1):
            gamma[i * N:(i + 1) * N, j * N:(j + 1) * N] = m.S[i - j]
    # upper triangle mirrored from the lower one so Hermitian symmetry is exact
    lower = np.tril(gamma, -1)
    gamma = lower + lower.conj().T + np.diag(gamma.diagonal().real)
    gamma.setflags(write=False)
    return GramMatrix(gamma=gamma, N=N, d=d)


@dataclass(frozen=True)
class Solvability:
    solvable: bool
    min_eigenvalue: float


def check_solvable(g: GramMatrix, tol: float = DEFAULT_PSD_TOL) -> Solvability:
    """Solvable iff ``lambda_min >= -tol * max(1, lambda_max)``."""
    w = g.eigenvalues()
    lo, hi = float(w[0]), float(w[-1])
    return Solvability(solvable=lo >= -tol * max(1.0, hi), min_eigenvalue=lo)
