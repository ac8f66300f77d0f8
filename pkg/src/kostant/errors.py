"""Exception types raised across the package."""


class KostantError(Exception):
    """Base class for all package errors."""


class InvalidRankError(KostantError, ValueError):
    pass


class InvalidIndexError(KostantError, IndexError):
    pass


class InvalidWeightError(KostantError, ValueError):
    pass


class InvalidInputError(KostantError, ValueError):
    pass


class ResourceLimitError(KostantError, RuntimeError):
    """Raised when a request would exceed a configured enumeration ceiling."""

    def __init__(self, message, ceiling=None):
        super().__init__(message)
        self.ceiling = ceiling
