"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied input (non-coprime pair, degenerate polygon, ...)."""


class ResourceGuardError(RuntimeError):
    """An enumeration would exceed the configured point budget."""


class InternalConsistencyError(AssertionError):
    """A verified identity failed; indicates a bug, never a valid outcome."""


class TruncationError(ArithmeticError):
    """A truncated series operation produced an empty coefficient window."""


class ConfigurationError(ValueError):
    """A truncation setting cannot represent the requested coefficient."""


class WrongBranchError(ValueError):
    """The regular coth expansion was requested at a pole."""
