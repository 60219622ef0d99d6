import numpy as np
import pytest

from discpca import LabeledDataset


def principal_angles(a, b):
    """Angles between the column spans of a and b, in radians."""
    qa, _ = np.linalg.qr(a)
    qb, _ = np.linalg.qr(b)
    s = np.linalg.svd(qa.T @ qb, compute_uv=False)
    return np.arccos(np.clip(s, -1.0, 1.0))


def random_dataset(rng, c, per_class, dim, spread=1.0, sep=3.0):
    """Gaussian class clusters in canonical label order."""
    means = sep * rng.standard_normal((dim, c))
    cols = []
    labels = []
    for i in range(c):
        cols.append(means[:, [i]] + spread * rng.standard_normal((dim, per_class)))
        labels.extend([i] * per_class)
    return LabeledDataset(samples=np.hstack(cols), labels=np.array(labels))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
