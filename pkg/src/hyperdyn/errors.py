class HyperdynError(ValueError):
    """Base class; ``code`` is the stable identifier used in CLI reports."""

    code = "Error"

    def __init__(self, message: str = "", witness=None):
        super().__init__(message or self.code)
        self.witness = witness


class DimMismatch(HyperdynError):
    code = "DimMismatch"


class EmptySet(HyperdynError):
    code = "EmptySet"


class NotInDomain(HyperdynError):
    code = "NotInDomain"


class NotInHyperplane(HyperdynError):
    code = "NotInHyperplane"


class NotFixedPointFree(HyperdynError):
    code = "NotFixedPointFree"


class UnverifiedInput(HyperdynError):
    code = "UnverifiedInput"


class Unsatisfiable(HyperdynError):
    code = "Unsatisfiable"


class UnknownSuite(HyperdynError):
    code = "UnknownSuite"


class MalformedInput(HyperdynError):
    code = "MalformedInput"
