"""Nearest-neighbour recognition in a projected feature space."""

from dataclasses import dataclass

import numpy as np

from .eigencore import as_matrix
from .errors import DimensionMismatch, EmptyGallery
from .pca import project


@dataclass(frozen=True)
class Gallery:
    """Reference feature columns with one class label per column."""

    features: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        features = as_matrix(self.features)
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.ndim != 1 or labels.size != features.shape[1]:
            raise ValueError("labels must be one integer per gallery column")
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)


def nn_classify(g, probe):
    """Label of the gallery column nearest (L2) to the probe; ties go to the lowest index."""
    if g.features.shape[1] == 0:
        raise EmptyGallery("gallery holds no samples")
    probe = np.asarray(probe, dtype=np.float64).reshape(-1)
    if probe.size != g.features.shape[0]:
        raise DimensionMismatch(
            f"probe has dim {probe.size}, gallery features have dim {g.features.shape[0]}"
        )
    d2 = np.sum((g.features - probe[:, None]) ** 2, axis=0)
    return int(g.labels[np.argmin(d2)])


def evaluate(subspace, train, test):
    """Fraction of test columns whose nearest projected train column shares their label."""
    gallery = Gallery(features=project(subspace, train.samples), labels=train.labels)
    probes = project(subspace, test.samples)
    correct = 0
    for j in range(probes.shape[1]):
        if nn_classify(gallery, probes[:, j]) == int(test.labels[j]):
            correct += 1
    return correct / probes.shape[1]
