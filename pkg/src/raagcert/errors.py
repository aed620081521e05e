"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates an operation's contract."""


class ResourceError(RuntimeError):
    """Raised when an input exceeds an operation's size budget."""
