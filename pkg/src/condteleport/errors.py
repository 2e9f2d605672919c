"""Exception types shared across the package."""


class CondTeleportError(Exception):
    """Base class for all package-specific errors."""


class ZeroStateError(CondTeleportError):
    """Normalization was requested for a vector of (near-)zero norm."""


class TruncationOverflowError(CondTeleportError):
    """A photon-number raise would push nonzero amplitude past the cutoff."""


class ImpossibleOutcomeError(CondTeleportError):
    """The requested photon-count outcome has zero probability."""

    def __init__(self, message, probability=0.0):
        super().__init__(message)
        self.probability = probability


class PrecisionLossError(CondTeleportError):
    """An alternating sum lost too many digits even in extended precision."""


class DimensionTooLargeError(CondTeleportError):
    """A dense two-mode operator would exceed the tractable size."""


class ZeroDensityError(CondTeleportError):
    """The homodyne outcome density underflowed to zero."""


class ConvergenceError(CondTeleportError):
    """A quantity changed by more than the tolerance under cutoff doubling."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
