"""Exception types shared across the package."""


class PscaError(Exception):
    """Base class for errors raised by this package."""


class InputError(PscaError, ValueError):
    """Invalid argument: malformed permutation, bad parameters, unknown name."""


class ResourceLimitError(PscaError):
    """A computation would exceed a configured memory or size cap."""

    def __init__(self, message: str, required_bytes: int | None = None, cap_bytes: int | None = None):
        super().__init__(message)
        self.required_bytes = required_bytes
        self.cap_bytes = cap_bytes
