"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the operation's mathematical domain."""


class CapacityError(RuntimeError):
    """The request exceeds a configured size cap."""
