"""Dataset loading, deterministic splits, synthetic generation, CSV interchange.

Directory layout: one subdirectory per class, each holding PGM images of one
person. Classes are ordered by subdirectory name, images by filename, both
ascending lexicographic. Every image is flattened row-major into one column.

Supported formats are binary (P5) and ASCII (P2) PGM with maxval <= 255,
read bit-exactly. FERET-style TIFF inputs must be converted to PGM first.
"""

import hashlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    EmptyClass,
    MixedDimensions,
    NotEnoughSamples,
    UnsupportedFormat,
)
from .scatter import LabeledDataset


def read_pgm(path):
    """Read a P2/P5 PGM file into a (height, width) float64 array in [0, 255]."""
    path = Path(path)
    data = path.read_bytes()
    if data[:2] not in (b"P2", b"P5"):
        raise UnsupportedFormat(f"{path}: not a P2/P5 PGM file")
    magic = data[:2].decode()

    # header tokens, honouring '#' comments up to end of line
    pos = 2
    tokens = []
    while len(tokens) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise UnsupportedFormat(f"{path}: truncated header")
        if data[pos : pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise UnsupportedFormat(f"{path}: malformed header") from None
    if width < 1 or height < 1:
        raise UnsupportedFormat(f"{path}: bad dimensions {width}x{height}")
    if not 0 < maxval <= 255:
        raise UnsupportedFormat(f"{path}: maxval {maxval} unsupported (need <= 255)")

    n = width * height
    if magic == "P5":
        pos += 1  # exactly one whitespace byte after maxval
        raster = data[pos : pos + n]
        if len(raster) != n:
            raise UnsupportedFormat(f"{path}: raster truncated")
        pixels = np.frombuffer(raster, dtype=np.uint8).astype(np.float64)
    else:
        body = data[pos:].split(b"\n")
        values = []
        for line in body:
            hash_at = line.find(b"#")
            if hash_at >= 0:
                line = line[:hash_at]
            values.extend(line.split())
        if len(values) < n:
            raise UnsupportedFormat(f"{path}: raster truncated")
        pixels = np.array([int(v) for v in values[:n]], dtype=np.float64)
    if pixels.max(initial=0.0) > maxval:
        raise UnsupportedFormat(f"{path}: pixel exceeds declared maxval")
    return pixels.reshape(height, width)


def load_dataset(root):
    """Load a class-per-directory image tree into a LabeledDataset."""
    root = Path(root)
    class_dirs = sorted(p for p in root.iterdir() if p.is_dir())
    if not class_dirs:
        raise EmptyClass(f"{root}: no class subdirectories")
    columns = []
    labels = []
    shape = None
    for idx, cdir in enumerate(class_dirs):
        files = sorted(p for p in cdir.iterdir() if p.is_file())
        if not files:
            raise EmptyClass(f"{cdir}: class directory holds no images")
        for f in files:
            img = read_pgm(f)
            if shape is None:
                shape = img.shape
            elif img.shape != shape:
                raise MixedDimensions(
                    f"{f}: image is {img.shape}, expected {shape}"
                )
            columns.append(img.reshape(-1))  # row-major flatten
            labels.append(idx)
    return LabeledDataset(samples=np.column_stack(columns), labels=np.array(labels))


@dataclass(frozen=True)
class SplitSpec:
    """Per-class split: first l by load order, or a seeded per-class shuffle."""

    l: int
    strategy: str = "first_l"  # "first_l" | "seeded_random"
    seed: int = 0


def split(d, s):
    """Split into (train, test) with l training columns per class.

    seeded_random draws one child generator per class from a SeedSequence, so
    splits are deterministic in the seed and independent of class count
    elsewhere. Canonical ordering (ascending class blocks, load order within
    each block) is re-established on both halves.
    """
    if s.l < 1:
        raise NotEnoughSamples("l must be >= 1")
    if s.strategy not in ("first_l", "seeded_random"):
        raise ValueError(f"unknown split strategy {s.strategy!r}")
    children = np.random.SeedSequence(s.seed).spawn(d.n_classes)
    train_idx = []
    test_idx = []
    for i in range(d.n_classes):
        members = np.nonzero(d.labels == i)[0]
        if s.l >= members.size:
            raise NotEnoughSamples(
                f"class {i} has {members.size} samples, cannot train on l={s.l}"
            )
        if s.strategy == "first_l":
            chosen = members[: s.l]
        else:
            rng = np.random.Generator(np.random.PCG64(children[i]))
            perm = rng.permutation(members.size)
            chosen = np.sort(members[perm[: s.l]])
        train_idx.extend(chosen)
        test_idx.extend(np.setdiff1d(members, chosen))
    train_idx = np.array(train_idx)
    test_idx = np.array(test_idx)
    train = LabeledDataset(samples=d.samples[:, train_idx], labels=d.labels[train_idx])
    test = LabeledDataset(samples=d.samples[:, test_idx], labels=d.labels[test_idx])
    return train, test


@dataclass(frozen=True)
class SynthSpec:
    """Synthetic face-like generator standing in for restricted image datasets.

    Class means sit on a sphere of radius class_sep in the leading
    (ambient - nuisance_dims) coordinates. Every sample adds isotropic noise
    of scale within_spread. The last nuisance_dims coordinates carry a
    high-variance component of scale nuisance_scale that is shared across
    classes per sample index, modelling class-independent variation such as
    illumination conditions.
    """

    c: int
    per_class: int
    ambient: int
    class_sep: float
    within_spread: float
    nuisance_dims: int = 0
    nuisance_scale: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if min(self.c, self.per_class, self.ambient) < 1:
            raise ValueError("c, per_class and ambient must be >= 1")
        if not 0 <= self.nuisance_dims < self.ambient:
            raise ValueError("nuisance_dims must lie in [0, ambient)")
        if min(self.class_sep, self.within_spread, self.nuisance_scale) < 0:
            raise ValueError("scales must be >= 0")


def synth_faces(spec):
    """Generate a LabeledDataset per SynthSpec, deterministic in the seed."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(spec.seed)))
    signal_dims = spec.ambient - spec.nuisance_dims
    total = spec.c * spec.per_class

    dirs = rng.standard_normal((signal_dims, spec.c))
    dirs /= np.linalg.norm(dirs, axis=0)
    means = spec.class_sep * dirs

    samples = spec.within_spread * rng.standard_normal((spec.ambient, total))
    nuisance = spec.nuisance_scale * rng.standard_normal((spec.nuisance_dims, spec.per_class))

    labels = np.repeat(np.arange(spec.c), spec.per_class)
    for col in range(total):
        i = labels[col]
        j = col % spec.per_class
        samples[:signal_dims, col] += means[:, i]
        if spec.nuisance_dims:
            samples[signal_dims:, col] += nuisance[:, j]
    return LabeledDataset(samples=samples, labels=labels)


def save_csv(d, path):
    """Write the CSV interchange format: `rows,cols` then `label,v0,v1,...` per column."""
    with open(path, "w") as fh:
        fh.write(f"{d.dim},{d.n_samples}\n")
        for j in range(d.n_samples):
            vals = ",".join(f"{v:.17g}" for v in d.samples[:, j])
            fh.write(f"{int(d.labels[j])},{vals}\n")


def load_csv(path):
    """Read the CSV interchange format back into a LabeledDataset."""
    with open(path) as fh:
        rows, cols = (int(t) for t in fh.readline().split(","))
        samples = np.empty((rows, cols))
        labels = np.empty(cols, dtype=np.int64)
        for j in range(cols):
            parts = fh.readline().rstrip("\n").split(",")
            labels[j] = int(parts[0])
            samples[:, j] = [float(v) for v in parts[1:]]
    return LabeledDataset(samples=samples, labels=labels)


def fingerprint(d):
    """Content hash of a dataset (samples plus labels)."""
    h = hashlib.sha256()
    h.update(np.ascontiguousarray(d.samples).tobytes())
    h.update(np.ascontiguousarray(d.labels).tobytes())
    return h.hexdigest()
