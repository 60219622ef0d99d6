import numpy as np
import pytest

from discpca import (
    LabeledDataset,
    class_means,
    direct_scatter,
    gram_scatter,
    regularize,
)
from discpca.errors import AmbientTooLarge, DegenerateDivisor
from discpca.scatter import ScatterPair, scatter_rank

from conftest import random_dataset


def brute_force_scatter(d):
    """Term-by-term accumulation of the scatter sums."""
    gm, cm = class_means(d)
    sb = np.zeros((d.dim, d.dim))
    for i in range(d.n_classes):
        v = cm[:, i] - gm
        sb += np.outer(v, v)
    sw = np.zeros((d.dim, d.dim))
    for j in range(d.n_samples):
        v = d.samples[:, j] - cm[:, d.labels[j]]
        sw += np.outer(v, v)
    return sb, sw


def test_class_means_single_column():
    x = np.array([[1.0], [2.0]])
    d = LabeledDataset(samples=x, labels=np.array([0]))
    gm, cm = class_means(d)
    assert np.array_equal(gm, x[:, 0])
    assert np.array_equal(cm, x)


def test_class_means_two_classes():
    d = LabeledDataset(
        samples=np.array([[0.0, 2.0], [0.0, 2.0]]), labels=np.array([0, 1])
    )
    gm, cm = class_means(d)
    assert np.allclose(gm, [1.0, 1.0])
    assert np.allclose(cm, [[0.0, 2.0], [0.0, 2.0]])


def test_class_means_against_summation_oracle(rng):
    d = random_dataset(rng, c=3, per_class=4, dim=6)
    gm, cm = class_means(d)
    assert np.allclose(gm, d.samples.sum(axis=1) / d.n_samples, atol=1e-12)
    for i in range(3):
        block = d.samples[:, d.labels == i]
        assert np.allclose(cm[:, i], block.sum(axis=1) / block.shape[1], atol=1e-12)


def test_direct_scatter_degenerate_cases(rng):
    one_class = random_dataset(rng, c=1, per_class=4, dim=3)
    assert np.allclose(direct_scatter(one_class).sb, 0.0, atol=1e-12)
    singletons = random_dataset(rng, c=4, per_class=1, dim=3)
    assert np.allclose(direct_scatter(singletons).sw, 0.0, atol=1e-12)


def test_direct_scatter_matches_accumulation_oracle(rng):
    d = random_dataset(rng, c=2, per_class=2, dim=3)
    pair = direct_scatter(d)
    sb, sw = brute_force_scatter(d)
    assert np.allclose(pair.sb, sb, atol=1e-12)
    assert np.allclose(pair.sw, sw, atol=1e-12)


def test_direct_scatter_ambient_limit(rng):
    d = random_dataset(rng, c=2, per_class=2, dim=513)
    with pytest.raises(AmbientTooLarge):
        direct_scatter(d)


def test_gram_scatter_degenerate_cases(rng):
    one_class = random_dataset(rng, c=1, per_class=4, dim=5)
    g = gram_scatter(one_class)
    assert g.sb.shape == (4, 4)
    assert np.allclose(g.sb, 0.0, atol=1e-9)
    singletons = random_dataset(rng, c=4, per_class=1, dim=5)
    assert np.allclose(gram_scatter(singletons).sw, 0.0, atol=1e-9)


def test_gram_equals_conjugated_direct(rng):
    for _ in range(20):
        c = int(rng.integers(2, 6))
        d = random_dataset(rng, c=c, per_class=int(rng.integers(2, 5)), dim=int(rng.integers(3, 64)))
        direct = direct_scatter(d)
        gram = gram_scatter(d)
        omega = d.samples
        for got, want in ((gram.sb, omega.T @ direct.sb @ omega), (gram.sw, omega.T @ direct.sw @ omega)):
            denom = max(1.0, np.linalg.norm(want, ord="fro"))
            assert np.linalg.norm(got - want, ord="fro") <= 1e-9 * denom


def test_between_class_rank_bound(rng):
    for _ in range(10):
        c = int(rng.integers(2, 8))
        d = random_dataset(rng, c=c, per_class=3, dim=40)
        for pair in (direct_scatter(d), gram_scatter(d)):
            vals = np.linalg.eigvalsh(pair.sb)
            assert scatter_rank(vals, pair.sb.shape[0]) <= c - 1


def test_scatter_positive_semidefinite(rng):
    d = random_dataset(rng, c=4, per_class=3, dim=20)
    for pair in (direct_scatter(d), gram_scatter(d)):
        for m in (pair.sb, pair.sw):
            vals = np.linalg.eigvalsh(m)
            assert vals.min() >= -1e-8 * max(1.0, np.linalg.norm(m, ord="fro"))


def test_regularize_mean_all_twos():
    s = ScatterPair(sb=np.full((2, 2), 2.0), sw=np.full((2, 2), 2.0), space="gram")
    out = regularize(s, "mean")
    assert np.allclose(out.sb, 1.0)
    assert np.allclose(out.sw, 1.0)
    assert out.divisors == (2.0, 2.0)
    assert out.regularization == "mean"


def test_regularize_max_hand_case():
    m = np.array([[1.0, 2.0], [2.0, 4.0]])
    out = regularize(ScatterPair(sb=m, sw=m, space="gram"), "max")
    assert np.allclose(out.sb, m / 4.0)
    assert np.allclose(out.sb.max(), 1.0, atol=1e-12)


def test_regularize_mean_recompute_oracle(rng):
    m = np.abs(rng.standard_normal((5, 5))) + 0.1
    m = (m + m.T) / 2.0
    out = regularize(ScatterPair(sb=m, sw=2.0 * m, space="gram"), "mean")
    assert abs(out.sb.mean() - 1.0) <= 1e-12
    assert abs(out.sw.mean() - 1.0) <= 1e-12


def test_regularize_none_and_reuse_guard():
    m = np.eye(2)
    s = ScatterPair(sb=m, sw=m, space="gram")
    assert regularize(s, "none") is s
    out = regularize(s, "mean")
    with pytest.raises(ValueError):
        regularize(out, "max")


def test_regularize_degenerate_divisor():
    z = np.zeros((3, 3))
    with pytest.raises(DegenerateDivisor):
        regularize(ScatterPair(sb=z, sw=np.eye(3), space="gram"), "mean")
