"""Exception types raised across the package."""


class PartDecompError(Exception):
    """Base class for all errors raised by this package."""


class BeadCountTooSmall(PartDecompError, ValueError):
    pass


class MalformedDiagram(PartDecompError, ValueError):
    pass


class SizeMismatch(PartDecompError, ValueError):
    pass


class IncomparableDomain(PartDecompError, ValueError):
    pass


class DeltaNotInvertible(PartDecompError, ZeroDivisionError):
    pass


class LabelTooLarge(PartDecompError, ValueError):
    pass


class PSingularLabel(PartDecompError, ValueError):
    pass


class GeneratorMismatch(PartDecompError, ValueError):
    pass


class ChopBudgetExceeded(PartDecompError, RuntimeError):
    """The randomized chop could neither split nor certify a module."""


class IdentificationFailed(PartDecompError, RuntimeError):
    """A simple factor matched zero or several candidate labels."""


class ChainShapeViolation(PartDecompError, AssertionError):
    pass


class UnsupportedCase(PartDecompError, ValueError):
    """No closed-form recipe covers the requested configuration."""


class DeskScaleExceeded(PartDecompError, ValueError):
    pass
