import numpy as np
import pytest

from discpca import (
    SplitSpec,
    SynthSpec,
    fit_pca,
    load_csv,
    load_dataset,
    read_pgm,
    save_csv,
    split,
    synth_faces,
)
from discpca.errors import (
    EmptyClass,
    MixedDimensions,
    NotEnoughSamples,
    UnsupportedFormat,
)

from conftest import random_dataset


def write_p5(path, width, height, pixels, maxval=255):
    path.write_bytes(f"P5 {width} {height} {maxval} ".encode() + bytes(pixels))


def write_p2(path, width, height, pixels, maxval=255):
    body = " ".join(str(p) for p in pixels)
    path.write_text(f"P2\n# comment\n{width} {height}\n{maxval}\n{body}\n")


def test_read_p5_bit_exact(tmp_path):
    f = tmp_path / "a.pgm"
    write_p5(f, 2, 2, [0, 128, 255, 64])
    img = read_pgm(f)
    assert img.shape == (2, 2)
    assert np.array_equal(img.reshape(-1), [0.0, 128.0, 255.0, 64.0])


def test_read_p2_with_comment(tmp_path):
    f = tmp_path / "a.pgm"
    write_p2(f, 3, 1, [7, 0, 200])
    assert np.array_equal(read_pgm(f).reshape(-1), [7.0, 0.0, 200.0])


def test_read_rejects_bad_files(tmp_path):
    f = tmp_path / "bad.pgm"
    f.write_bytes(b"P6 1 1 255 \x00\x00\x00")
    with pytest.raises(UnsupportedFormat):
        read_pgm(f)
    g = tmp_path / "wide.pgm"
    g.write_bytes(b"P5 1 1 65535 \x00\x00")
    with pytest.raises(UnsupportedFormat):
        read_pgm(g)
    h = tmp_path / "short.pgm"
    h.write_bytes(b"P5 2 2 255 \x00")
    with pytest.raises(UnsupportedFormat):
        read_pgm(h)


def test_load_dataset_two_classes_row_major(tmp_path):
    (tmp_path / "s1").mkdir()
    (tmp_path / "s0").mkdir()
    write_p5(tmp_path / "s0" / "img.pgm", 2, 2, [0, 128, 255, 64])
    write_p5(tmp_path / "s1" / "img.pgm", 2, 2, [1, 2, 3, 4])
    d = load_dataset(tmp_path)
    assert d.samples.shape == (4, 2)
    assert np.array_equal(d.labels, [0, 1])  # s0 before s1, lexicographic
    assert np.array_equal(d.samples[:, 0], [0.0, 128.0, 255.0, 64.0])
    assert np.array_equal(d.samples[:, 1], [1.0, 2.0, 3.0, 4.0])


def test_load_dataset_errors(tmp_path):
    (tmp_path / "a").mkdir()
    with pytest.raises(EmptyClass):
        load_dataset(tmp_path)
    write_p5(tmp_path / "a" / "x.pgm", 2, 2, [0, 0, 0, 0])
    (tmp_path / "b").mkdir()
    write_p5(tmp_path / "b" / "x.pgm", 1, 2, [0, 0])
    with pytest.raises(MixedDimensions):
        load_dataset(tmp_path)


def test_split_first_l_leaves_rest(rng):
    d = random_dataset(rng, c=3, per_class=5, dim=4)
    train, test = split(d, SplitSpec(l=4))
    assert train.n_samples == 12 and test.n_samples == 3
    assert train.n_samples + test.n_samples == d.n_samples
    assert np.array_equal(test.labels, [0, 1, 2])
    # first_l takes the leading columns of each class block
    assert np.array_equal(train.samples[:, :4], d.samples[:, :4])


def test_split_seeded_deterministic(rng):
    d = random_dataset(rng, c=4, per_class=6, dim=5)
    s = SplitSpec(l=3, strategy="seeded_random", seed=99)
    t1, e1 = split(d, s)
    t2, e2 = split(d, s)
    assert t1.samples.tobytes() == t2.samples.tobytes()
    assert e1.samples.tobytes() == e2.samples.tobytes()
    t3, _ = split(d, SplitSpec(l=3, strategy="seeded_random", seed=100))
    assert t1.samples.tobytes() != t3.samples.tobytes()


def test_split_not_enough_samples(rng):
    d = random_dataset(rng, c=2, per_class=3, dim=4)
    with pytest.raises(NotEnoughSamples):
        split(d, SplitSpec(l=3))


def test_synth_no_spread_makes_identical_class_columns():
    d = synth_faces(
        SynthSpec(c=3, per_class=4, ambient=10, class_sep=2.0, within_spread=0.0, seed=5)
    )
    for i in range(3):
        block = d.samples[:, d.labels == i]
        assert np.all(block == block[:, [0]])


def test_synth_seed_determinism():
    spec = SynthSpec(
        c=3, per_class=4, ambient=12, class_sep=2.0, within_spread=1.0,
        nuisance_dims=3, nuisance_scale=5.0, seed=77,
    )
    assert synth_faces(spec).samples.tobytes() == synth_faces(spec).samples.tobytes()


def test_dominant_nuisance_captured_by_top_principal_direction():
    spec = SynthSpec(
        c=5, per_class=6, ambient=30, class_sep=1.0, within_spread=0.1,
        nuisance_dims=4, nuisance_scale=50.0, seed=3,
    )
    d = synth_faces(spec)
    sub = fit_pca(d, p=1)
    nuisance_mass = np.linalg.norm(sub.basis[-4:, 0])
    assert nuisance_mass >= 0.9


def test_csv_round_trip_bitwise(tmp_path, rng):
    d = random_dataset(rng, c=3, per_class=4, dim=7)
    path = tmp_path / "data.csv"
    save_csv(d, path)
    back = load_csv(path)
    assert back.samples.tobytes() == d.samples.tobytes()
    assert np.array_equal(back.labels, d.labels)
