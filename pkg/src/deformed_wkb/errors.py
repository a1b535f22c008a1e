"""Exception hierarchy shared by all modules."""


class WKBError(Exception):
    """Base class for every error raised by the package."""


class DomainError(WKBError, ValueError):
    pass


class ClassicallyForbidden(WKBError, ValueError):
    pass


class OutsideAllowedRegion(WKBError, ValueError):
    pass


class SingularMetric(WKBError, ValueError):
    pass


class NoBoundRegion(WKBError):
    pass


class NoConvergence(WKBError, ArithmeticError):
    pass


class BracketingFailure(WKBError):
    """Raised when the energy scan never brackets the quantization target.

    ``scanned`` holds the (low, high) energies examined before giving up.
    """

    def __init__(self, message, scanned=None):
        super().__init__(message)
        self.scanned = scanned


class InvalidQuantumNumber(WKBError, ValueError):
    pass


class NoReferenceAvailable(WKBError):
    pass
