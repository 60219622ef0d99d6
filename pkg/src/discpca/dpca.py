"""Discriminative PCA: PCA performed on the lifted DLDA discriminative matrix.

Pipeline: gram scatter -> regularize -> direct LDA in Gram space -> lift the
directions to ambient space (the discriminative matrix W) -> centre W across
its columns -> eigendecompose the small column covariance -> lift each kept
eigenvector back through the centred W and normalize. The result is an
orthonormal ambient basis whose directions carry class-discriminative
variance rather than raw sample variance.
"""

import numpy as np

from .eigencore import rank_tolerance, sym_eig
from .errors import DegenerateData, RankExceeded
from .lda import fit_dlda_gram, lift
from .pca import FeatureSubspace
from .scatter import gram_scatter, regularize


def fit_dpca(d, p, m=None, discarded_w=0, rule="mean"):
    """Fit the discriminative-PCA feature subspace with p retained columns."""
    if p < 1:
        raise ValueError("p must be >= 1")
    pair = regularize(gram_scatter(d), rule)
    res = fit_dlda_gram(pair, m=m, discarded_w=discarded_w)
    w = lift(res.w_tilde, d.samples)
    m_eff = w.shape[1]
    if m_eff == 1:
        raise DegenerateData("m=1: centring a single discriminant column annihilates it")
    centred = w - w.mean(axis=1)[:, None]
    cw = (centred.T @ centred) / m_eff
    eig = sym_eig((cw + cw.T) / 2.0)
    tol = rank_tolerance(m_eff, eig.values[0]) if eig.values[0] > 0 else 0.0
    rank = int(np.count_nonzero(eig.values > tol))
    if rank == 0:
        raise DegenerateData("discriminative matrix has no variance across columns")
    if p > rank:
        raise RankExceeded(f"p={p} exceeds numerical rank {rank} of the column covariance")
    if np.any(eig.values[:p] <= tol):
        raise DegenerateData("a selected covariance eigenvalue is below tolerance")
    basis = centred @ eig.vectors[:, :p]
    basis /= np.linalg.norm(basis, axis=0)
    return FeatureSubspace(
        basis=basis,
        method="dpca",
        eigenvalues=eig.values[:p].copy(),
        meta={
            "p": p,
            "m": m_eff,
            "discarded_w": discarded_w,
            "rule": rule,
            "kept_b": res.kept_b,
        },
    )
