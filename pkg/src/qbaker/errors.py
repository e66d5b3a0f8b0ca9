"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's documented domain."""


class SizeError(DomainError):
    """Dense-matrix request beyond the qubit-count guard."""


class ParseError(ValueError):
    """Malformed state, circuit, or manifest file."""
