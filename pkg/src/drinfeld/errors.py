"""Exception types shared across the package."""


class DrinfeldError(Exception):
    """Base class for domain errors."""


class RootExtractionFailure(DrinfeldError):
    """A required q^m-th root does not exist in the coefficient field
    (or no root-extraction algorithm is available for it)."""


class KernelNotStable(DrinfeldError):
    """The kernel of a candidate isogeny is not a module under phi."""


class StableReductionRequired(DrinfeldError):
    """A finite local height is non-integral, so the module does not have
    everywhere stable reduction; twist first."""


class IrreducibilityUncertain(DrinfeldError):
    """None of the implemented irreducibility certificates applies."""
