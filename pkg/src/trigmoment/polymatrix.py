"""Matrix polynomials in one complex variable, stored by coefficient."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PolyMatrix:
    """``P(z) = sum_k coeffs[k] z^k`` with ``coeffs`` of shape ``(deg+1, rows, cols)``.

    Trailing zero coefficients are kept; ``degree_bound`` is the storage degree,
    not necessarily the exact degree.
    """

    coeffs: np.ndarray

    # let ndarray @ PolyMatrix fall through to __rmatmul__
    __array_ufunc__ = None

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim == 2:
            c = c[None]
        if c.ndim != 3 or c.shape[0] == 0:
            raise ValueError(f"coefficients must have shape (deg+1, rows, cols), got {c.shape}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, m) -> "PolyMatrix":
        return cls(np.asarray(m, dtype=complex)[None])

    @classmethod
    def monomial(cls, m, power: int) -> "PolyMatrix":
        m = np.asarray(m, dtype=complex)
        c = np.zeros((power + 1,) + m.shape, dtype=complex)
        c[power] = m
        return cls(c)

    @property
    def rows(self) -> int:
        return self.coeffs.shape[1]

    @property
    def cols(self) -> int:
        return self.coeffs.shape[2]

    @property
    def shape(self):
        return self.coeffs.shape[1:]

    @property
    def degree_bound(self) -> int:
        return self.coeffs.shape[0] - 1

    def degree(self, tol: float = 0.0) -> int:
        """Exact degree after discarding coefficients with entries ``<= tol``; -1 for zero."""
        nz = np.nonzero(np.max(np.abs(self.coeffs), axis=(1, 2), initial=0.0) > tol)[0]
        return int(nz[-1]) if nz.size else -1

    def __call__(self, z) -> np.ndarray:
        """Value at ``z``; an array of points gives shape ``z.shape + (rows, cols)``."""
        z = np.asarray(z)[..., None, None]
        out = np.zeros(z.shape[:-2] + self.shape, dtype=complex)
        for c in self.coeffs[::-1]:
            out = out * z + c
        return out

    def __matmul__(self, other) -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            other = PolyMatrix.constant(other)
        a, b = self.coeffs, other.coeffs
        out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1], b.shape[2]), dtype=complex)
        for i in range(a.shape[0]):
            for j in range(b.shape[0]):
                out[i + j] += a[i] @ b[j]
        return PolyMatrix(out)

    def __rmatmul__(self, other) -> "PolyMatrix":
        return PolyMatrix.constant(other) @ self

    def __add__(self, other) -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            other = PolyMatrix.constant(other)
        n = max(self.coeffs.shape[0], other.coeffs.shape[0])
        out = np.zeros((n,) + self.shape, dtype=complex)
        out[:self.coeffs.shape[0]] += self.coeffs
        out[:other.coeffs.shape[0]] += other.coeffs
        return PolyMatrix(out)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(-self.coeffs)

    def __sub__(self, other) -> "PolyMatrix":
        return self + (-other if isinstance(other, PolyMatrix) else -np.asarray(other))

    def scale(self, poly) -> "PolyMatrix":
        """Multiply by a scalar polynomial given by ascending coefficients."""
        p = np.atleast_1d(np.asarray(poly, dtype=complex))
        out = np.zeros((self.coeffs.shape[0] + p.size - 1,) + self.shape, dtype=complex)
        for i, c in enumerate(p):
            out[i:i + self.coeffs.shape[0]] += c * self.coeffs
        return PolyMatrix(out)

    def shift(self, k: int = 1) -> "PolyMatrix":
        """Multiply by ``z^k``."""
        pad = np.zeros((k,) + self.shape, dtype=complex)
        return PolyMatrix(np.concatenate([pad, self.coeffs]))

    def __getitem__(self, idx) -> "PolyMatrix":
        rows, cols = idx
        return PolyMatrix(self.coeffs[:, rows, cols])


def polyval(p, z):
    """Evaluate a scalar polynomial given by ascending coefficients."""
    return np.polynomial.polynomial.polyval(z, np.asarray(p, dtype=complex))
