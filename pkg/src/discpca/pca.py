"""Eigenfaces PCA via the small Gram matrix of centred samples.

Eigenvectors of A A^T are recovered as A u from eigenvectors u of the
total x total matrix A^T A, so nothing of ambient x ambient size is ever
formed.
"""

from dataclasses import dataclass, field

import numpy as np

from .eigencore import as_matrix, rank_tolerance, sym_eig
from .errors import DegenerateData, DimensionMismatch, RankExceeded


@dataclass(frozen=True)
class FeatureSubspace:
    """Projection basis with unit-norm columns; applied as y = basis^T x."""

    basis: np.ndarray
    method: str  # "pca" | "fisher" | "dlda" | "dpca"
    eigenvalues: np.ndarray
    meta: dict = field(default_factory=dict)


def fit_pca(d, p):
    """Top-p principal directions of the centred sample matrix.

    Labels are ignored. The sample matrix is centred, scaled by 1/sqrt(dim),
    and the eigenproblem is solved on A^T A; retained eigenvalues are the
    top-p of that spectrum.
    """
    omega = d.samples
    dim, total = omega.shape
    mean = omega.mean(axis=1)
    a = (omega - mean[:, None]) / np.sqrt(dim)
    atilde = a.T @ a
    eig = sym_eig((atilde + atilde.T) / 2.0)
    tol = rank_tolerance(total, eig.values[0]) if eig.values[0] > 0 else 0.0
    rank = int(np.count_nonzero(eig.values > tol))
    if rank == 0:
        raise DegenerateData("all samples identical: centred matrix has rank 0")
    if not 1 <= p <= rank:
        raise RankExceeded(f"p={p} outside [1, numerical rank {rank}]")
    basis = a @ eig.vectors[:, :p]
    basis /= np.linalg.norm(basis, axis=0)
    return FeatureSubspace(
        basis=basis, method="pca", eigenvalues=eig.values[:p].copy(), meta={"p": p}
    )


def project(s, samples):
    """Project sample columns onto the subspace: Y = basis^T samples."""
    samples = as_matrix(samples)
    if samples.shape[0] != s.basis.shape[0]:
        raise DimensionMismatch(
            f"samples have dim {samples.shape[0]}, basis expects {s.basis.shape[0]}"
        )
    return s.basis.T @ samples
