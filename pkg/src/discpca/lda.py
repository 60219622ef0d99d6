"""Fisher LDA (small-dimension baseline) and direct LDA in Gram space.

Fisher LDA needs an invertible within-class scatter and is only usable when
the ambient dimension is small; it serves as an oracle. Direct LDA whitens
the between-class scatter first, discarding its null space while keeping the
null space of the within-class scatter, which is what makes it usable when
samples are scarcer than pixels. Directions found in Gram space transfer to
ambient space by multiplying with the sample matrix.
"""

from dataclasses import dataclass

import numpy as np

from .eigencore import as_matrix, rank_tolerance, sym_eig
from .errors import (
    AmbientTooLarge,
    DegenerateData,
    DimensionMismatch,
    EmptyBetweenClassRange,
    MExceedsRange,
    SingularWithinClass,
)
from .pca import FeatureSubspace
from .scatter import AMBIENT_LIMIT, direct_scatter, gram_scatter, regularize


@dataclass(frozen=True)
class DldaResult:
    """Gram-space discriminant directions plus the rank bookkeeping behind them."""

    w_tilde: np.ndarray
    kept_b: int
    discarded_w: int


def fit_fisher(d, m):
    """Classical Fisher directions, top-m eigenvectors of Sw^-1 Sb.

    Solved through the symmetric equivalent Sw^-1/2 Sb Sw^-1/2 so the shared
    symmetric eigensolver applies. Requires small ambient dimension and a
    numerically invertible within-class scatter.
    """
    if d.dim > AMBIENT_LIMIT:
        raise AmbientTooLarge(f"ambient dim {d.dim} exceeds {AMBIENT_LIMIT}")
    c = d.n_classes
    if not 1 <= m <= c - 1:
        raise ValueError(f"m={m} outside [1, c-1={c - 1}]")
    pair = direct_scatter(d)
    ew = sym_eig(pair.sw)
    tol = rank_tolerance(d.dim, ew.values[0])
    if np.min(ew.values) <= tol:
        raise SingularWithinClass("within-class scatter is numerically singular")
    inv_sqrt = (ew.vectors * ew.values**-0.5) @ ew.vectors.T
    sym = inv_sqrt @ pair.sb @ inv_sqrt
    eig = sym_eig((sym + sym.T) / 2.0)
    basis = inv_sqrt @ eig.vectors[:, :m]
    basis /= np.linalg.norm(basis, axis=0)
    return FeatureSubspace(
        basis=basis, method="fisher", eigenvalues=eig.values[:m].copy(), meta={"m": m}
    )


def fit_dlda_gram(s, m=None, discarded_w=0):
    """Direct LDA on a Gram-space scatter pair.

    Steps: eigendecompose sb and keep the range above tolerance; whiten with
    B' = Eb_hat Lb_hat^-1/2; eigendecompose B'^T sw B'; drop the
    ``discarded_w`` largest within-class eigenvalues, keep the rest ordered
    ascending (least within-class spread first) and truncate to m; rescale by
    Lw_hat^-1/2 with eigenvalues floored at the rank tolerance so numerically
    null within-class directions survive instead of blowing up.
    """
    if s.space != "gram":
        raise ValueError("fit_dlda_gram expects a gram-space scatter pair")
    if discarded_w < 0:
        raise ValueError("discarded_w must be >= 0")
    n = s.sb.shape[0]
    eb = sym_eig(s.sb)
    tol_b = rank_tolerance(n, np.max(np.abs(eb.values))) if n else 0.0
    kept_b = int(np.count_nonzero(eb.values > tol_b))
    if kept_b == 0:
        raise EmptyBetweenClassRange("between-class scatter has no range above tolerance")
    bprime = eb.vectors[:, :kept_b] * eb.values[:kept_b] ** -0.5
    swb = bprime.T @ s.sw @ bprime
    eig_w = sym_eig((swb + swb.T) / 2.0)
    avail = kept_b - discarded_w
    if m is None:
        m = avail
    if not 1 <= m <= avail:
        raise MExceedsRange(f"m={m} outside [1, kept_b-discarded_w={avail}]")
    # after dropping the largest within-class eigenvalues, order ascending
    vals = eig_w.values[discarded_w:][::-1][:m].copy()
    vecs = eig_w.vectors[:, discarded_w:][:, ::-1][:, :m]
    tol_w = rank_tolerance(kept_b, np.max(np.abs(eig_w.values)))
    floor = tol_w if tol_w > 0.0 else 1.0
    vals = np.maximum(vals, floor)
    w_tilde = bprime @ (vecs * vals**-0.5)
    return DldaResult(w_tilde=w_tilde, kept_b=kept_b, discarded_w=discarded_w)


def lift(w_tilde, omega):
    """Carry Gram-space directions to ambient space: W = omega @ w_tilde."""
    w_tilde = as_matrix(w_tilde)
    omega = as_matrix(omega)
    if omega.shape[1] != w_tilde.shape[0]:
        raise DimensionMismatch(
            f"omega has {omega.shape[1]} columns, w_tilde has {w_tilde.shape[0]} rows"
        )
    return omega @ w_tilde


def fit_dlda(d, m=None, discarded_w=0, rule="mean"):
    """End-to-end DLDA feature subspace: gram scatter, regularize, lift, normalize."""
    pair = regularize(gram_scatter(d), rule)
    res = fit_dlda_gram(pair, m=m, discarded_w=discarded_w)
    w = lift(res.w_tilde, d.samples)
    norms = np.linalg.norm(w, axis=0)
    if np.any(norms < 1e-300):
        raise DegenerateData("a lifted discriminant direction is numerically zero")
    basis = w / norms
    return FeatureSubspace(
        basis=basis,
        method="dlda",
        eigenvalues=np.array([]),
        meta={"m": w.shape[1], "discarded_w": discarded_w, "rule": rule, "kept_b": res.kept_b},
    )
