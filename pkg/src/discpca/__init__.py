"""Discriminative PCA feature extraction with PCA and direct-LDA baselines,
plus a nearest-neighbour recognition benchmark harness."""

from .classify import Gallery, evaluate, nn_classify
from .dataset import (
    SplitSpec,
    SynthSpec,
    fingerprint,
    load_csv,
    load_dataset,
    read_pgm,
    save_csv,
    split,
    synth_faces,
)
from .dpca import fit_dpca
from .eigencore import EigenDecomposition, matmul, rank_tolerance, sym_eig, transpose
from .lda import DldaResult, fit_dlda, fit_dlda_gram, fit_fisher, lift
from .pca import FeatureSubspace, fit_pca, project
from .scatter import (
    LabeledDataset,
    ScatterPair,
    class_means,
    direct_scatter,
    gram_scatter,
    regularize,
)

__version__ = "0.1.0"

__all__ = [
    "DldaResult",
    "EigenDecomposition",
    "FeatureSubspace",
    "Gallery",
    "LabeledDataset",
    "ScatterPair",
    "SplitSpec",
    "SynthSpec",
    "class_means",
    "direct_scatter",
    "evaluate",
    "fingerprint",
    "fit_dlda",
    "fit_dlda_gram",
    "fit_dpca",
    "fit_fisher",
    "fit_pca",
    "gram_scatter",
    "lift",
    "load_csv",
    "load_dataset",
    "matmul",
    "nn_classify",
    "project",
    "rank_tolerance",
    "read_pgm",
    "regularize",
    "save_csv",
    "split",
    "sym_eig",
    "synth_faces",
    "transpose",
]
