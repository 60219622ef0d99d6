"""Dense symmetric eigendecomposition and small matrix-algebra helpers.

Everything downstream (PCA, DLDA, the discriminative pipeline) goes through
``sym_eig`` so the whole library shares one sort order and one deterministic
sign convention.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotFinite, NotSymmetric

SYMMETRY_TOL = 1e-9
SIGN_EPS = 1e-12
RANK_EPS = 1e-12


def as_matrix(a):
    """Validate and return a 2-D float64 array with finite entries."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got ndim={m.ndim}")
    if not np.isfinite(m).all():
        raise NotFinite("matrix contains NaN or Inf entries")
    return m


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted descending; column k of ``vectors`` pairs with ``values[k]``."""

    values: np.ndarray
    vectors: np.ndarray


def sym_eig(a):
    """Full eigendecomposition of a symmetric matrix.

    Eigenvalues come back sorted non-increasing. Each eigenvector is fixed so
    that its first component of magnitude > 1e-12 is positive, which makes the
    output reproducible across runs and machines with the same BLAS.
    """
    m = as_matrix(a)
    rows, cols = m.shape
    if rows != cols:
        raise NotSymmetric(f"matrix is {rows}x{cols}, not square")
    if rows > 0 and np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise NotSymmetric("matrix is not symmetric within 1e-9 per entry")
    sym = (m + m.T) / 2.0
    w, v = np.linalg.eigh(sym)
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    for k in range(cols):
        col = v[:, k]
        nz = np.nonzero(np.abs(col) > SIGN_EPS)[0]
        if nz.size and col[nz[0]] < 0.0:
            v[:, k] = -col
    return EigenDecomposition(values=w, vectors=v)


def matmul(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def transpose(a):
    return as_matrix(a).T.copy()


def rank_tolerance(n, lam_max):
    """Zero-eigenvalue cutoff: n * lambda_max * 1e-12."""
    return n * abs(lam_max) * RANK_EPS


def numerical_rank(values, n=None):
    """Count eigenvalues above the rank tolerance of the spectrum."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        return 0
    if n is None:
        n = values.size
    tol = rank_tolerance(n, np.max(np.abs(values)))
    return int(np.count_nonzero(values > tol))
