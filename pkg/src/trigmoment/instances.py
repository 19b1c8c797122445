"""Reference data and random instance generators used by tests and scripts."""
from __future__ import annotations

import numpy as np
import scipy.stats

from .measures import MatrixMeasure, from_atoms
from .moments import MomentSequence

EXAMPLE_S0 = np.array([[1, 1, 0], [1, 1, 0], [0, 0, 1]], dtype=complex)
EXAMPLE_S1 = np.array([[1, 1, 0], [1, 1, 0], [0, 0, 0]], dtype=complex)


def example_moments() -> MomentSequence:
    """Three-by-three indeterminate problem with one moment beyond ``S_0``."""
    return MomentSequence(np.array([EXAMPLE_S0, EXAMPLE_S1]))


def example_solution() -> MatrixMeasure:
    """The atomic solution of :func:`example_moments` generated by ``F = 1``."""
    m0 = np.zeros((3, 3), complex)
    m0[:2, :2] = 1
    m0[2, 2] = 0.5
    mpi = np.zeros((3, 3), complex)
    mpi[2, 2] = 0.5
    return MatrixMeasure(N=3, t=np.array([0.0, np.pi]), masses=np.array([m0, mpi]))


def random_psd(rng, N: int, rank: int, floor: float = 0.1) -> np.ndarray:
    """Random Hermitian PSD matrix of the given rank with eigenvalues in ``[floor, 1]``."""
    Q = scipy.stats.unitary_group.rvs(N, random_state=rng) if N > 1 else np.ones((1, 1))
    lam = rng.uniform(floor, 1.0, size=rank)
    return (Q[:, :rank] * lam) @ Q[:, :rank].conj().T


def random_measure(rng, N: int, n_atoms: int, full_rank: bool = False) -> MatrixMeasure:
    """Atoms on a randomly rotated, jittered equispaced grid with random PSD masses.

    Neighbouring atoms stay at least ``0.4 * 2pi / n_atoms`` apart.
    """
    slots = np.arange(n_atoms) + rng.uniform(-0.3, 0.3, size=n_atoms)
    t = rng.uniform(0, 2 * np.pi) + 2 * np.pi * slots / n_atoms
    ranks = [N if full_rank else int(rng.integers(1, N + 1)) for _ in t]
    masses = np.array([random_psd(rng, N, r) for r in ranks])
    return from_atoms(t, masses, N=N)


def random_instance(rng, N: int | None = None, d: int | None = None, max_n: int = 3,
                    max_d: int = 3):
    """Random ``(moments, generating measure)`` pair, ``N <= max_n``, ``1 <= d <= max_d``.

    The number of atoms ranges up to ``2 (d+1) N`` so that both determinate and
    indeterminate problems occur.
    """
    N = int(rng.integers(1, max_n + 1)) if N is None else N
    d = int(rng.integers(1, max_d + 1)) if d is None else d
    n_atoms = int(rng.integers(1, 2 * (d + 1) * N + 1))
    mu = random_measure(rng, N, n_atoms)
    return mu.moments(d), mu


def random_contraction(rng, delta: int, norm: float | None = None) -> np.ndarray:
    """Random ``delta x delta`` matrix with spectral norm ``norm`` (default uniform in (0, 1))."""
    if delta == 0:
        return np.zeros((0, 0), complex)
    X = rng.normal(size=(delta, delta)) + 1j * rng.normal(size=(delta, delta))
    norm = rng.uniform(0.05, 0.999) if norm is None else norm
    return X * (norm / np.linalg.norm(X, 2))


def random_unitary(rng, delta: int) -> np.ndarray:
    if delta == 0:
        return np.zeros((0, 0), complex)
    if delta == 1:
        return np.exp(2j * np.pi * rng.uniform()) * np.ones((1, 1))
    return scipy.stats.unitary_group.rvs(delta, random_state=rng)
