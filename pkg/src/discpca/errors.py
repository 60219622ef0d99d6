"""Exception hierarchy shared across the library."""


class DiscPcaError(Exception):
    """Base class for all library errors."""


class NotFinite(DiscPcaError):
    """Input contains NaN or Inf entries."""


class NotSymmetric(DiscPcaError):
    """Matrix is not square-symmetric within tolerance."""


class DimensionMismatch(DiscPcaError):
    """Operands have non-conformable shapes."""


class AmbientTooLarge(DiscPcaError):
    """Ambient dimension exceeds the limit for dense ambient-space scatter."""


class DegenerateDivisor(DiscPcaError):
    """Regularization divisor is numerically zero."""


class RankExceeded(DiscPcaError):
    """Requested component count exceeds the numerical rank."""


class DegenerateData(DiscPcaError):
    """Data carries no usable variance for the requested operation."""


class SingularWithinClass(DiscPcaError):
    """Within-class scatter is numerically singular (small-sample-size case)."""


class EmptyBetweenClassRange(DiscPcaError):
    """Between-class scatter has no eigenvalue above tolerance."""


class MExceedsRange(DiscPcaError):
    """Requested discriminant count exceeds the retained range."""


class EmptyGallery(DiscPcaError):
    """Gallery holds no reference samples."""


class MixedDimensions(DiscPcaError):
    """Images in a dataset directory do not share one size."""


class UnsupportedFormat(DiscPcaError):
    """Image file is not a supported PGM variant."""


class EmptyClass(DiscPcaError):
    """A class directory holds no images."""


class NotEnoughSamples(DiscPcaError):
    """A class has too few samples for the requested split."""
