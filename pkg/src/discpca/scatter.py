"""Between-class and within-class scatter, in ambient and Gram space.

The ambient construction materializes dim x dim matrices and is kept as an
oracle/baseline for small problems; the Gram construction works on the
total x total inner-product matrix and scales to image-sized data.
"""

from dataclasses import dataclass, field

import numpy as np

from .eigencore import as_matrix, rank_tolerance
from .errors import AmbientTooLarge, DegenerateDivisor

AMBIENT_LIMIT = 512
DIVISOR_EPS = 1e-12


@dataclass(frozen=True)
class LabeledDataset:
    """Sample columns plus 0-based class labels in canonical order.

    Canonical order means: columns of the same class are contiguous and the
    class blocks appear in ascending label order, every label in [0, c)
    occurring at least once.
    """

    samples: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        samples = as_matrix(self.samples)
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.ndim != 1 or labels.size != samples.shape[1]:
            raise ValueError("labels must be one integer per sample column")
        if labels.size == 0:
            raise ValueError("dataset must hold at least one sample")
        diffs = np.diff(labels)
        if np.any(diffs < 0) or np.any(diffs > 1) or labels[0] != 0:
            raise ValueError("labels must be contiguous ascending blocks 0,1,...,c-1")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self):
        return self.samples.shape[0]

    @property
    def n_samples(self):
        return self.samples.shape[1]

    @property
    def n_classes(self):
        return int(self.labels[-1]) + 1

    @property
    def counts(self):
        return np.bincount(self.labels, minlength=self.n_classes)


@dataclass(frozen=True)
class ScatterPair:
    """Between-class (sb) and within-class (sw) scatter with provenance tags."""

    sb: np.ndarray
    sw: np.ndarray
    space: str  # "ambient" | "gram"
    regularization: str = "none"  # "none" | "mean" | "max"
    divisors: tuple = field(default=None)


def class_means(d):
    """Global mean vector and a dim x c matrix of per-class mean columns."""
    global_mean = d.samples.mean(axis=1)
    c = d.n_classes
    means = np.empty((d.dim, c))
    for i in range(c):
        means[:, i] = d.samples[:, d.labels == i].mean(axis=1)
    return global_mean, means


def _scatter_from_columns(cols, labels, c):
    """Unweighted scatter sums over the given column matrix."""
    global_mean = cols.mean(axis=1)
    means = np.empty((cols.shape[0], c))
    for i in range(c):
        means[:, i] = cols[:, labels == i].mean(axis=1)
    db = means - global_mean[:, None]
    sb = db @ db.T
    dw = cols - means[:, labels]
    sw = dw @ dw.T
    return (sb + sb.T) / 2.0, (sw + sw.T) / 2.0


def direct_scatter(d):
    """Ambient-space scatter pair; only valid for small ambient dimension."""
    if d.dim > AMBIENT_LIMIT:
        raise AmbientTooLarge(f"ambient dim {d.dim} exceeds {AMBIENT_LIMIT}")
    sb, sw = _scatter_from_columns(d.samples, d.labels, d.n_classes)
    return ScatterPair(sb=sb, sw=sw, space="ambient")


def gram_scatter(d):
    """Scatter pair of the inner-product matrix G = samples^T samples.

    Columns of G are the Gram images of the samples, so per-class column
    means of G reproduce the Gram images of the class means and the same
    outer-product sums apply; the ambient scatter is never materialized.
    """
    g = d.samples.T @ d.samples
    sb, sw = _scatter_from_columns(g, d.labels, d.n_classes)
    return ScatterPair(sb=sb, sw=sw, space="gram")


def regularize(s, rule):
    """Divide each scatter matrix elementwise by its own mean or max entry."""
    if s.regularization != "none":
        raise ValueError("scatter pair is already regularized")
    if rule == "none":
        return s
    if rule == "mean":
        db, dw = float(s.sb.mean()), float(s.sw.mean())
    elif rule == "max":
        db, dw = float(s.sb.max()), float(s.sw.max())
    else:
        raise ValueError(f"unknown regularization rule {rule!r}")
    if abs(db) < DIVISOR_EPS or abs(dw) < DIVISOR_EPS:
        raise DegenerateDivisor(f"{rule} divisors ({db:g}, {dw:g}) too close to zero")
    return ScatterPair(
        sb=s.sb / db, sw=s.sw / dw, space=s.space, regularization=rule, divisors=(db, dw)
    )


def scatter_rank(values, n):
    """Eigenvalue count above the shared rank tolerance."""
    tol = rank_tolerance(n, np.max(np.abs(values))) if len(values) else 0.0
    return int(np.count_nonzero(values > tol))
