"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Unsupported Cartan family/rank pair or malformed construction data."""


class DomainError(ValueError):
    """Input violates a mathematical precondition (bad node index,
    non-dominant weight, non-minuscule orbit, missing base weight)."""


class ResourceLimitError(RuntimeError):
    """A configured size cap was exceeded while enumerating."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
