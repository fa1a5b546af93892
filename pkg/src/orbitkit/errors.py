"""Exception hierarchy shared by the library and the command line."""


class OrbitKitError(Exception):
    """Base class for all package errors."""


class DomainError(OrbitKitError, ValueError):
    """Unsupported group, feature or input outside an operation's domain."""


class SizeGuardError(OrbitKitError):
    """An enumeration would exceed the configured point budget."""


class InternalError(OrbitKitError, RuntimeError):
    """A consistency check failed; indicates a bug rather than bad input."""
